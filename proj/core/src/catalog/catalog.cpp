#include "hopfrep/catalog/catalog.hpp"

#include <algorithm>
#include <map>

#include "hopfrep/exact/errors.hpp"
#include "hopfrep/exact/polynomial.hpp"

namespace hopfrep {

namespace {

GQ q(const char* s) { return GQ::parse(s); }

std::string block_name(GBlock b) {
  switch (b) {
    case GBlock::eps: return "eps";
    case GBlock::sg: return "sg";
    default: return "st";
  }
}

IsotypicProfile profile_of(const std::vector<GBlock>& blocks) {
  IsotypicProfile p{{"eps", 0}, {"sg", 0}, {"st", 0}};
  for (auto b : blocks) ++p[block_name(b)];
  return p;
}

// a12 on w is forced by H12 a12 = -a12 H12 and H12 v = w
void fill_w_columns(ExactMatrix& a12, const std::vector<GBlock>& blocks) {
  std::size_t pos = 0;
  for (auto b : blocks) {
    if (b == GBlock::st) {
      Vec v = a12.column(pos);
      Vec hv(a12.rows());
      // H12 acts on each block: eps +1, sg -1, st swaps v,w
      std::size_t p2 = 0;
      for (auto c : blocks) {
        if (c == GBlock::eps) hv[p2] = v[p2];
        if (c == GBlock::sg) hv[p2] = -v[p2];
        if (c == GBlock::st) {
          hv[p2] = v[p2 + 1];
          hv[p2 + 1] = v[p2];
        }
        p2 += c == GBlock::st ? 2 : 1;
      }
      for (std::size_t r = 0; r < a12.rows(); ++r) a12(r, pos + 1) = -hv[r];
    }
    pos += b == GBlock::st ? 2 : 1;
  }
}

std::string m4_name(const std::vector<GQ>& p, const GQ& theta) {
  std::string s = "M(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + scalar_label(p[k]);
  return s + ")[" + scalar_label(theta) + "]";
}

}  // namespace

std::shared_ptr<const QlDatum> a_datum(int lambda) {
  static std::map<int, std::shared_ptr<const QlDatum>> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<const QlDatum>(build_builtin(Builtin::Q3_minus, 3, {GQ(lambda)}));
  cache[lambda] = d;
  return d;
}

const AlgebraTable& a_table(int lambda) {
  static std::map<int, std::unique_ptr<AlgebraTable>> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return *it->second;
  auto d = a_datum(lambda);
  auto t = std::make_unique<AlgebraTable>(build_table(d, a3_candidate_basis(*d)));
  return *(cache[lambda] = std::move(t));
}

std::vector<ExactMatrix> standard_rep() {
  return {ExactMatrix{{0, 1}, {1, 0}}, ExactMatrix{{1, 0}, {-1, -1}}, ExactMatrix{{-1, -1}, {0, 1}}};
}

std::vector<ExactMatrix> s3_blocks(const QlDatum& d, const std::vector<GBlock>& blocks) {
  auto st = standard_rep();
  std::vector<ExactMatrix> out;
  for (auto t : d.group.generators()) {
    const Perm& p = d.group.element(t);
    std::size_t which;
    if (p == transposition(3, 0, 1))
      which = 0;
    else if (p == transposition(3, 1, 2))
      which = 1;
    else if (p == transposition(3, 0, 2))
      which = 2;
    else
      throw Error("S3 blocks need transposition generators");
    ExactMatrix m;
    bool first = true;
    for (auto b : blocks) {
      ExactMatrix blk = b == GBlock::eps ? ExactMatrix{{1}} : b == GBlock::sg ? ExactMatrix{{-1}} : st[which];
      m = first ? blk : hopfrep::direct_sum(m, blk);
      first = false;
    }
    out.push_back(m);
  }
  return out;
}

HModule module_from_a12(std::shared_ptr<const QlDatum> d, const std::vector<GBlock>& blocks, const ExactMatrix& a12,
                        std::string name) {
  auto h = s3_blocks(*d, blocks);
  auto a = a_from_one(*d, group_matrices(d->group, h), d->rack.index_of("(12)"), a12);
  return {d, h, a, std::move(name)};
}

std::vector<CatalogEntry> simples(int lambda) {
  auto d = a_datum(lambda);
  std::vector<CatalogEntry> out;
  out.push_back({"S_eps", module_from_a12(d, {GBlock::eps}, ExactMatrix{{0}}, "S_eps"), true, true, {}});
  out.push_back({"S_sg", module_from_a12(d, {GBlock::sg}, ExactMatrix{{0}}, "S_sg"), true, true, {}});
  if (lambda == 0) {
    out.push_back({"S_st", module_from_a12(d, {GBlock::st}, ExactMatrix(2, 2), "S_st"), true, true, {}});
  } else {
    // a12 v = alpha v + beta w, a12 w = -beta v - alpha w
    for (const char* th : {"i", "-i", "i/3", "-i/3"}) {
      GQ alpha = q(th);
      GQ beta = (alpha * alpha == GQ(-1)) ? -alpha : alpha;
      std::string name = std::string("S_st(") + th + ")";
      out.push_back({name, module_from_a12(d, {GBlock::st}, ExactMatrix{{alpha, -beta}, {beta, -alpha}}, name), true,
                     true, {}});
    }
  }
  for (auto& e : out) {
    std::vector<GBlock> b = e.module.dim() == 2 ? std::vector<GBlock>{GBlock::st}
                                                : std::vector<GBlock>{e.name == "S_eps" ? GBlock::eps : GBlock::sg};
    e.profile = profile_of(b);
  }
  return out;
}

std::vector<CatalogEntry> indecomposables3(int lambda) {
  auto d = a_datum(lambda);
  std::vector<CatalogEntry> out;
  // basis: the one-dimensional vector first, then v, w
  auto add = [&](const std::string& name, GBlock one, const Vec& a_one, const Vec& a_v) {
    std::vector<GBlock> blocks{one, GBlock::st};
    ExactMatrix a12(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      a12(r, 0) = a_one[r];
      a12(r, 1) = a_v[r];
    }
    fill_w_columns(a12, blocks);
    out.push_back({name, module_from_a12(d, blocks, a12, name), false, true, profile_of(blocks)});
  };
  if (lambda == 0) {
    add("M_{st,eps}", GBlock::eps, {0, 0, 0}, {1, 0, 0});
    add("M_{st,sg}", GBlock::sg, {0, 0, 0}, {1, 0, 0});
    add("M_{eps,st}", GBlock::eps, {0, 1, -1}, {0, 0, 0});
    add("M_{sg,st}", GBlock::sg, {0, 1, 1}, {0, 0, 0});
    return out;
  }
  auto t3 = [](int s) { return q("i/3") * GQ(s); };
  auto t1 = [](int s) { return GQ::i() * GQ(s); };
  for (int s : {1, -1}) add("M_{st,eps}[" + scalar_label(t3(s)) + "]", GBlock::eps, {0, 0, 0}, {1, t3(s), t3(s)});
  for (int s : {1, -1}) add("M_{st,sg}[" + scalar_label(t1(s)) + "]", GBlock::sg, {0, 0, 0}, {1, t1(s), -t1(s)});
  for (int s : {1, -1}) add("M_{eps,st}[" + scalar_label(t1(s)) + "]", GBlock::eps, {0, 1, -1}, {0, t1(s), -t1(s)});
  for (int s : {1, -1}) add("M_{sg,st}[" + scalar_label(t3(s)) + "]", GBlock::sg, {0, 1, 1}, {0, t3(s), t3(s)});
  return out;
}

std::vector<CatalogEntry> indecomposables4() {
  auto d = a_datum(1);
  std::vector<GBlock> blocks{GBlock::eps, GBlock::sg, GBlock::st};
  std::vector<CatalogEntry> out;
  auto add = [&](const GQ& theta, std::vector<GQ> p) {
    GQ c = theta, dd = theta * theta == GQ(-1) ? -theta : theta;
    const GQ &al = p[0], &be = p[1], &ga = p[2], &et = p[3], &a = p[4], &b = p[5];
    ExactMatrix a12{{0, ga, a, -a}, {al, 0, b, b}, {be, et, c, -dd}, {-be, et, dd, -c}};
    std::string name = m4_name(p, theta);
    out.push_back({name, module_from_a12(d, blocks, a12, name), false, true, profile_of(blocks)});
  };
  for (int s : {1, -1}) {
    GQ th = q("i/3") * GQ(s), m = q("-2*i/3") * GQ(s);
    add(th, {0, 0, 1, 0, 1, 0});
    add(th, {0, 0, 1, 1, 0, 0});
    add(th, {1, 0, 0, 0, m, 1});
    add(th, {1, 1, 0, m, 0, 0});
  }
  for (int s : {1, -1}) {
    GQ th = GQ::i() * GQ(s), m = q("-2*i") * GQ(s);
    add(th, {1, 0, 0, 0, 0, 1});
    add(th, {1, 1, 0, 0, 0, 0});
    add(th, {0, m, 1, 1, 0, 0});
    add(th, {0, 0, 1, 0, 1, m});
  }
  return out;
}

std::vector<CatalogEntry> projectives(int lambda) {
  auto d = a_datum(lambda);
  const AlgebraTable& t = a_table(lambda);
  std::vector<CatalogEntry> out;
  IsotypicProfile big{{"eps", 2}, {"sg", 2}, {"st", 4}};
  out.push_back({"I_eps", induce(t, s3_blocks(*d, {GBlock::eps}), "I_eps"), false, true, big});
  out.push_back({"I_sg", induce(t, s3_blocks(*d, {GBlock::sg}), "I_sg"), false, true, big});
  if (lambda == 0) {
    out.push_back({"I_st", induce(t, s3_blocks(*d, {GBlock::st}), "I_st"), false, true,
                   {{"eps", 4}, {"sg", 4}, {"st", 8}}});
    return out;
  }
  std::vector<GBlock> blocks{GBlock::eps, GBlock::sg, GBlock::st, GBlock::st};
  GQ i = GQ::i();
  ExactMatrix a12{{0, 1, 0, 0, 1, -1},           {0, 0, 0, 0, q("-2*i"), q("-2*i")}, {2 * i, 1, -i, -i, 1, -1},
                  {-2 * i, 1, i, i, 1, -1},      {0, 0, 0, 0, i, i},                 {0, 0, 0, 0, -i, -i}};
  HModule p = module_from_a12(d, blocks, a12, "P_st(i)");
  HModule sg = simples(1)[1].module;
  IsotypicProfile prof = profile_of(blocks);
  out.push_back({"P_st(i)", p, false, true, prof});
  HModule m1 = tensor(p, sg), m2 = tensor(sg, p), m3 = tensor(tensor(sg, p), sg);
  m1.set_name("P_st(-i/3)");
  m2.set_name("P_st(i/3)");
  m3.set_name("P_st(-i)");
  out.push_back({"P_st(-i/3)", m1, false, true, prof});
  out.push_back({"P_st(i/3)", m2, false, true, prof});
  out.push_back({"P_st(-i)", m3, false, true, prof});
  return out;
}

std::vector<std::string> projective_tops(int lambda) {
  if (lambda == 0) return {"S_eps", "S_sg", "S_st"};
  return {"S_eps", "S_sg", "S_st(i)", "S_st(-i/3)", "S_st(i/3)", "S_st(-i)"};
}

CatalogEntry p1_family(const GQ& a, const GQ& b) {
  if (a.is_zero() && b.is_zero()) throw ValidationError("p1_family needs (a,b) != (0,0)");
  std::vector<GBlock> blocks{GBlock::st, GBlock::st};
  ExactMatrix a12(4, 4);
  a12(0, 2) = a;
  a12(1, 2) = b;
  fill_w_columns(a12, blocks);
  std::string name = "M_(" + scalar_label(a) + "," + scalar_label(b) + ")";
  return {name, module_from_a12(a_datum(0), blocks, a12, name), false, true, profile_of(blocks)};
}

std::vector<std::pair<GQ, GQ>> st_solutions(const GQ& lambda) {
  // alpha^2 = beta^2 means beta = s alpha with s = +-1; then (-5 - 4s) alpha^2 = lambda
  std::vector<std::pair<GQ, GQ>> out;
  for (int s : {-1, 1}) {
    GQ k(-5 - 4 * s);
    Polynomial p(std::vector<GQ>{-lambda, GQ(0), k});
    auto roots = gaussian_rational_roots(p);
    if (!roots) throw Error("root search gave up");
    for (const auto& r : *roots) {
      std::pair<GQ, GQ> sol{r, r * GQ(s)};
      if (std::find(out.begin(), out.end(), sol) == out.end()) out.push_back(sol);
    }
  }
  return out;
}

std::vector<FusionRule> fusion_expected() {
  std::vector<std::string> names{"S_eps", "S_sg", "S_st(i)", "S_st(-i)", "S_st(i/3)", "S_st(-i/3)"};
  std::vector<FusionRule> out;
  for (const auto& n : names) out.push_back({"S_eps", n, n});
  for (std::size_t k = 1; k < names.size(); ++k) out.push_back({names[k], "S_eps", names[k]});
  out.push_back({"S_sg", "S_sg", "S_eps"});
  // same sign, other absolute value on the left; opposite sign on the right
  out.push_back({"S_sg", "S_st(i)", "S_st(i/3)"});
  out.push_back({"S_sg", "S_st(-i)", "S_st(-i/3)"});
  out.push_back({"S_sg", "S_st(i/3)", "S_st(i)"});
  out.push_back({"S_sg", "S_st(-i/3)", "S_st(-i)"});
  out.push_back({"S_st(i)", "S_sg", "S_st(-i/3)"});
  out.push_back({"S_st(-i)", "S_sg", "S_st(i/3)"});
  out.push_back({"S_st(i/3)", "S_sg", "S_st(-i)"});
  out.push_back({"S_st(-i/3)", "S_sg", "S_st(i)"});
  const char* rows[][5] = {
      {"i", "i", "-i/3", "i/3", "M(0,2i,1,1,0,0)[-i]"},
      {"i", "-i", "-i/3", "-i/3", "M(1,0,0,0,-2i/3,1)[i/3]"},
      {"i", "i/3", "-i/3", "i", "M(0,0,1,0,1,2i)[-i]"},
      {"i", "-i/3", "-i/3", "-i", "M(1,1,0,-2i/3,0,0)[i/3]"},
      {"-i", "i", "i/3", "i/3", "M(1,0,0,0,2i/3,1)[-i/3]"},
      {"-i", "-i", "i/3", "-i/3", "M(0,-2i,1,1,0,0)[i]"},
      {"-i", "i/3", "i/3", "i", "M(1,1,0,2i/3,0,0)[-i/3]"},
      {"-i", "-i/3", "i/3", "-i", "M(0,0,1,0,1,-2i)[i]"},
  };
  auto st = [](const char* t) { return std::string("S_st(") + t + ")"; };
  for (const auto& r : rows) {
    out.push_back({st(r[0]), st(r[1]), r[4]});
    out.push_back({st(r[2]), st(r[3]), r[4]});
  }
  return out;
}

std::string scalar_label(const GQ& x) {
  if (x.is_real()) return x.re().to_string();
  if (!x.re().is_zero()) return x.to_string();
  const Rational& b = x.im();
  std::string s = b.sign() < 0 ? "-" : "";
  mpz_class num = abs(b.numerator()), den = b.denominator();
  if (num != 1) s += num.get_str();
  s += "i";
  if (den != 1) s += "/" + den.get_str();
  return s;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& list, const std::string& name) {
  for (const auto& e : list)
    if (e.name == name) return e;
  throw Error("no catalog entry named " + name);
}

}  // namespace hopfrep
