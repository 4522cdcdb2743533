#pragma once

// Evaluators for inequalities on the order, exponent and generator count
// of c-nilpotent multipliers. Each evaluator yields BoundReports; a report
// is verified only when both of its sides are known.

#include "nilmult/abelian.hpp"
#include "nilmult/group_engine.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/pvalue.hpp"
#include "nilmult/witt_hall.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nilmult {

enum class Quantity { order, exponent, generators };
enum class Relation { divides, less_equal };
enum class Verdict { holds, fails, unverifiable, not_applicable, informational };

inline const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::order: return "order";
    case Quantity::exponent: return "exponent";
    case Quantity::generators: return "generators";
  }
  return "?";
}
inline const char* to_string(Relation r) { return r == Relation::divides ? "divides" : "<="; }
inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unverifiable: return "unverifiable";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::informational: return "informational";
  }
  return "?";
}

/// Order and exponent sides are factorized values; generator counts are plain integers.
using BoundValue = std::variant<PValue, BigInt>;

inline std::string to_string(const BoundValue& v) {
  if (const auto* p = std::get_if<PValue>(&v)) return p->to_string();
  return std::get<BigInt>(v).str();
}

struct BoundReport {
  std::string id;
  Quantity quantity = Quantity::order;
  std::string lhs_label;
  std::string rhs_label;
  std::optional<BoundValue> lhs;
  std::optional<BoundValue> rhs;
  Relation relation = Relation::less_equal;
  bool applicable = true;
  std::string reason;  // machine-readable when not applicable
  std::string note;
  Verdict verdict = Verdict::unverifiable;

  bool holds() const { return verdict == Verdict::holds; }
};

struct BoundOptions {
  Caps caps = Caps{};
  MultiplierOptions multiplier;
  /// Generator of the cyclic central subgroup B of the order-bound with
  /// B of order exp(Z(G)); defaults to the first central element of that order.
  std::optional<Element> central_cyclic_generator;
};

/// Everything the evaluators read about one group and one class c.
class BoundContext {
 public:
  BoundContext(FiniteGroup g, unsigned c, BoundOptions opts = {})
      : BoundContext(g, analyze(g, opts.caps), c, opts) {}

  /// Reuses an analysis of `g` computed earlier (e.g. across several c).
  BoundContext(FiniteGroup g, GroupAnalysis analysis, unsigned c, BoundOptions opts = {})
      : group_(std::move(g)), c_(c), opts_(std::move(opts)), analysis_(std::move(analysis)) {
    if (c_ == 0) throw InvalidArgument("bounds: class c must be positive");
    multiplier_ = known_multiplier({group_, c_}, opts_.multiplier);
    schur_ = c_ == 1 ? multiplier_ : known_multiplier({group_, 1}, opts_.multiplier);
    if (analysis_.p_group) {
      prime_ = analysis_.prime.value_or(0);
      e_ = log_p(analysis_.exponent);
      k_ = log_p(analysis_.center_exponent);
    }
  }

  const FiniteGroup& group() const { return group_; }
  const GroupAnalysis& analysis() const { return analysis_; }
  const BoundOptions& options() const { return opts_; }
  unsigned c() const { return c_; }

  /// M^(c)(G) when known.
  const std::optional<KnownMultiplier>& multiplier() const { return multiplier_; }
  /// M(G) = M^(1)(G) when known.
  const std::optional<KnownMultiplier>& schur_multiplier() const { return schur_; }

  bool p_group() const { return analysis_.p_group; }
  bool nilpotent() const { return analysis_.nilpotency_class.has_value(); }
  /// p, or 0 for the trivial group.
  std::uint64_t prime() const { return prime_; }
  /// |G| = p^n
  unsigned n() const { return analysis_.log_order; }
  /// exp(Z(G)) = p^k
  unsigned k() const { return k_; }
  /// exp(G) = p^e
  unsigned e() const { return e_; }
  /// nilpotency class t
  std::optional<unsigned> t() const { return analysis_.nilpotency_class; }
  /// d(G)
  std::optional<unsigned> d() const { return analysis_.min_generators; }
  /// special rank r(G)
  std::optional<unsigned> r() const { return analysis_.special_rank; }

  PValue p_power(const BigInt& exponent) const { return PValue::prime_power(prime_, exponent); }

  std::size_t gamma_order(unsigned j) const { return analysis_.gamma(j).size(); }

  /// gamma_j(G) abelianized.
  AbelianGroup gamma_ab(unsigned j) const { return abelianization_of(group_, analysis_.gamma(j)); }
  /// Q_j = G/gamma_j(G).
  FiniteGroup q(unsigned j) const { return quotient(group_, analysis_.gamma(j)); }

  /// |gamma_{c+1}(G)| * |M^(c)(G)| when the multiplier is known.
  std::optional<PValue> gamma_times_multiplier(unsigned j) const {
    if (!multiplier_) return std::nullopt;
    return PValue::of(gamma_order(j)) * PValue::order_of(multiplier_->value);
  }

 private:
  unsigned log_p(std::uint64_t x) const {
    unsigned r = 0;
    for (; x > 1; x /= prime_) ++r;
    return r;
  }

  FiniteGroup group_;
  unsigned c_;
  BoundOptions opts_;
  GroupAnalysis analysis_;
  std::optional<KnownMultiplier> multiplier_;
  std::optional<KnownMultiplier> schur_;
  std::uint64_t prime_ = 0;
  unsigned e_ = 0;
  unsigned k_ = 0;
};

namespace detail {

inline bool compare_sides(const BoundValue& lhs, const BoundValue& rhs, Relation rel) {
  if (rel == Relation::divides) {
    if (const auto* a = std::get_if<PValue>(&lhs)) return a->divides(std::get<PValue>(rhs));
    const auto& a = std::get<BigInt>(lhs);
    const auto& b = std::get<BigInt>(rhs);
    return a != 0 && b % a == 0;
  }
  if (const auto* a = std::get_if<PValue>(&lhs)) return *a <= std::get<PValue>(rhs);
  return std::get<BigInt>(lhs) <= std::get<BigInt>(rhs);
}

inline BoundReport make_report(std::string id, Quantity q, std::string lhs_label, std::optional<BoundValue> lhs,
                               Relation rel, std::string rhs_label, std::optional<BoundValue> rhs,
                               std::string note = {}) {
  BoundReport r;
  r.id = std::move(id);
  r.quantity = q;
  r.lhs_label = std::move(lhs_label);
  r.rhs_label = std::move(rhs_label);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.relation = rel;
  r.note = std::move(note);
  if (r.lhs && r.rhs) r.verdict = compare_sides(*r.lhs, *r.rhs, rel) ? Verdict::holds : Verdict::fails;
  else r.verdict = Verdict::unverifiable;
  return r;
}

inline BoundReport not_applicable(std::string id, Quantity q, std::string reason) {
  BoundReport r;
  r.id = std::move(id);
  r.quantity = q;
  r.applicable = false;
  r.reason = std::move(reason);
  r.verdict = Verdict::not_applicable;
  return r;
}

template <class T>
std::optional<BoundValue> lift(const std::optional<T>& v) {
  if (!v) return std::nullopt;
  return BoundValue{*v};
}

inline std::string cstr(unsigned c) { return std::to_string(c); }

}  // namespace detail

/// p^chi_{c+1}(d) <= |gamma_{c+1}(G)||M^(c)(G)| <= p^chi_{c+1}(n) for a d-generator group of order p^n.
inline std::pair<BoundReport, BoundReport> corollary12(const BoundContext& ctx) {
  using namespace detail;
  if (!ctx.p_group())
    return {not_applicable("corollary12.lower", Quantity::order, "not_p_group"),
            not_applicable("corollary12.upper", Quantity::order, "not_p_group")};
  const unsigned c = ctx.c();
  const std::string mid_label = "|gamma_" + cstr(c + 1) + "(G)|*|M^(" + cstr(c) + ")(G)|";
  const auto mid = lift(ctx.gamma_times_multiplier(c + 1));
  auto upper = make_report("corollary12.upper", Quantity::order, mid_label, mid, Relation::less_equal,
                           "p^chi_" + cstr(c + 1) + "(n)", ctx.p_power(witt_or_zero(c + 1, ctx.n())));
  if (!ctx.d()) return {not_applicable("corollary12.lower", Quantity::order, "generator_cap_exceeded"), upper};
  auto lower = make_report("corollary12.lower", Quantity::order, "p^chi_" + cstr(c + 1) + "(d)",
                           ctx.p_power(witt_or_zero(c + 1, *ctx.d())), Relation::less_equal, mid_label, mid);
  return {lower, upper};
}

/// |gamma_{c+1}(G)||M^(c)(G)| <= p^(chi_{c+1}(n-k) + d k (1+d)^(c-1)) with B
/// cyclic central of order p^k = exp(Z(G)) and d = d(G/B).
inline BoundReport theorem_A(const BoundContext& ctx) {
  using namespace detail;
  const std::string id = "theorem_A";
  if (!ctx.p_group()) return not_applicable(id, Quantity::order, "not_p_group");
  const auto& g = ctx.group();
  const auto z = center(g);
  Element b = g.identity();
  if (const auto& chosen = ctx.options().central_cyclic_generator) {
    if (*chosen >= g.order() || !z.contains(*chosen) || g.element_order(*chosen) != ctx.analysis().center_exponent)
      throw InvalidArgument("theorem_A: chosen generator must be central of order exp(Z(G))");
    b = *chosen;
  } else {
    for (Element x : z.elements())
      if (g.element_order(x) == ctx.analysis().center_exponent) {
        b = x;
        break;
      }
  }
  const Element gens[] = {b};
  const auto bsub = generated_subgroup(g, gens);
  const auto a = quotient(g, bsub);
  if (a.order() > ctx.options().caps.min_generators) return not_applicable(id, Quantity::order, "generator_cap_exceeded");
  const BigInt d = min_generators(a, ctx.options().caps.min_generators);
  const unsigned c = ctx.c();
  const BigInt k = ctx.k();
  const BigInt exponent = witt_or_zero(c + 1, ctx.n() - ctx.k()) + d * k * pow(1 + d, c - 1);
  return make_report(id, Quantity::order, "|gamma_" + cstr(c + 1) + "(G)|*|M^(" + cstr(c) + ")(G)|",
                     lift(ctx.gamma_times_multiplier(c + 1)), Relation::less_equal,
                     "p^(chi_" + cstr(c + 1) + "(n-k)+d*k*(1+d)^" + cstr(c - 1) + ")", ctx.p_power(exponent),
                     "B=<" + g.label(b) + ">, k=" + k.str() + ", d(G/B)=" + d.str());
}

/// Bounds through M^(c)(G/G') and the tensor powers
/// (x)^{c+1}(gamma_{k+1}(G), Q_{k+1}), k = 1..t-1; tensor arguments are
/// abelianized. Order and exponent relations are divisibility.
inline std::array<BoundReport, 3> theorem_B(const BoundContext& ctx) {
  using namespace detail;
  if (!ctx.nilpotent())
    return {not_applicable("theorem_B.order", Quantity::order, "not_nilpotent"),
            not_applicable("theorem_B.exponent", Quantity::exponent, "not_nilpotent"),
            not_applicable("theorem_B.generators", Quantity::generators, "not_nilpotent")};
  const unsigned c = ctx.c();
  const unsigned t = *ctx.t();
  const auto m_ab = abelian_multiplier(ctx.analysis().abelianization, c);
  PValue order = PValue::order_of(m_ab);
  PValue exponent = PValue::exponent_of(m_ab);
  BigInt gens = m_ab.rank();
  for (unsigned k = 1; k + 1 <= t; ++k) {
    const auto tp = tensor_power(ctx.gamma_ab(k + 1), abelianization(ctx.q(k + 1)), c);
    order = order * PValue::order_of(tp);
    exponent = exponent * PValue::exponent_of(tp);
    gens += tp.rank();
  }
  const auto& m = ctx.multiplier();
  const std::string mc = "M^(" + cstr(c) + ")";
  const std::string tensors = "prod_k (x)^" + cstr(c + 1) + "(gamma_{k+1}(G),Q_{k+1})";
  std::optional<BoundValue> m_exp, m_gens;
  if (m) {
    m_exp = PValue::exponent_of(m->value);
    m_gens = BigInt(m->value.rank());
  }
  return {make_report("theorem_B.order", Quantity::order, "|gamma_" + cstr(c + 1) + "(G)|*|" + mc + "(G)|",
                      lift(ctx.gamma_times_multiplier(c + 1)), Relation::divides, "|" + mc + "(G/G')|*|" + tensors + "|",
                      order),
          make_report("theorem_B.exponent", Quantity::exponent, "exp(" + mc + "(G))", m_exp, Relation::divides,
                      "exp(" + mc + "(G/G'))*exp(" + tensors + ")", exponent),
          make_report("theorem_B.generators", Quantity::generators, "d(" + mc + "(G))", m_gens, Relation::less_equal,
                      "d(" + mc + "(G/G'))+sum d(" + tensors + ")", gens)};
}

/// Bounds through M^(c)(G/gamma_t(G)) and (x)^{c+1}(gamma_t(G), G/Z_{t-1}(G))
/// for class t >= 2. The order bound controls |gamma_t||M| when c+1 <= t
/// and |gamma_{c+1}||M| when c+1 > t.
inline std::array<BoundReport, 3> theorem_C(const BoundContext& ctx) {
  using namespace detail;
  const char* reason = !ctx.nilpotent() ? "not_nilpotent" : (*ctx.t() < 2 ? "class_below_2" : nullptr);
  if (reason)
    return {not_applicable("theorem_C.order", Quantity::order, reason),
            not_applicable("theorem_C.exponent", Quantity::exponent, reason),
            not_applicable("theorem_C.generators", Quantity::generators, reason)};
  const unsigned c = ctx.c();
  const unsigned t = *ctx.t();
  const auto& g = ctx.group();
  const auto& an = ctx.analysis();
  const auto top = quotient(g, an.gamma(t));
  const auto m_top = known_multiplier({top, c}, ctx.options().multiplier);
  const auto tp = tensor_power(ctx.gamma_ab(t), abelianization(quotient(g, an.upper(t - 1))), c);
  const std::string mc = "M^(" + cstr(c) + ")";
  const std::string tens = "(x)^" + cstr(c + 1) + "(gamma_" + cstr(t) + "(G),G/Z_" + cstr(t - 1) + "(G))";

  std::optional<BoundValue> rhs_order, rhs_exp, rhs_gens;
  if (m_top) {
    rhs_order = PValue::order_of(m_top->value) * PValue::order_of(tp);
    rhs_exp = PValue::exponent_of(m_top->value) * PValue::exponent_of(tp);
    rhs_gens = BigInt(m_top->value.rank() + tp.rank());
  }
  const bool case_a = c + 1 <= t;
  const unsigned j = case_a ? t : c + 1;
  const auto& m = ctx.multiplier();
  std::optional<BoundValue> m_exp, m_gens;
  if (m) {
    m_exp = PValue::exponent_of(m->value);
    m_gens = BigInt(m->value.rank());
  }
  const std::string note = case_a ? "case c+1<=t" : "case c+1>t";
  return {make_report("theorem_C.order", Quantity::order, "|gamma_" + cstr(j) + "(G)|*|" + mc + "(G)|",
                      lift(ctx.gamma_times_multiplier(j)), Relation::divides,
                      "|" + mc + "(G/gamma_" + cstr(t) + "(G))|*|" + tens + "|", rhs_order, note),
          make_report("theorem_C.exponent", Quantity::exponent, "exp(" + mc + "(G))", m_exp, Relation::divides,
                      "exp(" + mc + "(G/gamma_" + cstr(t) + "(G)))*exp(" + tens + ")", rhs_exp),
          make_report("theorem_C.generators", Quantity::generators, "d(" + mc + "(G))", m_gens, Relation::less_equal,
                      "d(" + mc + "(G/gamma_" + cstr(t) + "(G)))+d(" + tens + ")", rhs_gens)};
}

/// d(M^(c)(G)) <= chi_{c+1}(d) + r^(c+1) (t-1) for a p-group of special rank r.
inline BoundReport corollary26(const BoundContext& ctx) {
  using namespace detail;
  const std::string id = "corollary26";
  if (!ctx.p_group()) return not_applicable(id, Quantity::generators, "not_p_group");
  if (!ctx.r()) return not_applicable(id, Quantity::generators, "rank_cap_exceeded");
  if (!ctx.d()) return not_applicable(id, Quantity::generators, "generator_cap_exceeded");
  const unsigned c = ctx.c();
  const unsigned t = ctx.t().value_or(0);
  const BigInt rhs = witt_or_zero(c + 1, *ctx.d()) + pow(BigInt(*ctx.r()), c + 1) * (t == 0 ? 0 : t - 1);
  std::optional<BoundValue> lhs;
  if (ctx.multiplier()) lhs = BigInt(ctx.multiplier()->value.rank());
  return make_report(id, Quantity::generators, "d(M^(" + cstr(c) + ")(G))", lhs, Relation::less_equal,
                     "chi_" + cstr(c + 1) + "(d)+r^" + cstr(c + 1) + "*(t-1)", rhs);
}

/// exp(M^(c)(G)) <= exp(G/G') * prod_{j=1}^{t-1} min{exp(Q_{j+1}), exp(gamma_{j+1}(G))}.
inline BoundReport corollary27(const BoundContext& ctx) {
  using namespace detail;
  const std::string id = "corollary27";
  if (!ctx.nilpotent()) return not_applicable(id, Quantity::exponent, "not_nilpotent");
  const unsigned t = *ctx.t();
  PValue rhs = PValue::exponent_of(ctx.analysis().abelianization);
  for (unsigned j = 1; j + 1 <= t; ++j) {
    const auto eq = group_exponent(ctx.q(j + 1));
    const auto eg = subset_exponent(ctx.group(), ctx.analysis().gamma(j + 1));
    rhs = rhs * PValue::of(std::min(eq, eg));
  }
  std::optional<BoundValue> lhs;
  if (ctx.multiplier()) lhs = PValue::exponent_of(ctx.multiplier()->value);
  return make_report(id, Quantity::exponent, "exp(M^(" + cstr(ctx.c()) + ")(G))", lhs, Relation::less_equal,
                     "exp(G/G')*prod_j e_j", rhs);
}

/// exp(M^(c)(G)) <= p^(e t) for a p-group of exponent p^e and class t.
inline BoundReport corollary27_pet(const BoundContext& ctx) {
  using namespace detail;
  const std::string id = "corollary27.pet";
  if (!ctx.p_group()) return not_applicable(id, Quantity::exponent, "not_p_group");
  const unsigned t = ctx.t().value_or(0);
  std::optional<BoundValue> lhs;
  if (ctx.multiplier()) lhs = PValue::exponent_of(ctx.multiplier()->value);
  return make_report(id, Quantity::exponent, "exp(M^(" + cstr(ctx.c()) + ")(G))", lhs, Relation::less_equal,
                     "p^(e*t)", ctx.p_power(BigInt(ctx.e()) * t));
}

/// exp(M^(c)(G)) <= p^(e*ceil(t/2)) for class t >= 2. Reported for
/// reference only, never verified.
inline BoundReport ellis_exponent(const BoundContext& ctx) {
  using namespace detail;
  const std::string id = "ellis.exponent";
  if (!ctx.p_group()) return not_applicable(id, Quantity::exponent, "not_p_group");
  const unsigned t = ctx.t().value_or(0);
  if (t < 2) return not_applicable(id, Quantity::exponent, "class_below_2");
  std::optional<BoundValue> lhs;
  if (ctx.multiplier()) lhs = PValue::exponent_of(ctx.multiplier()->value);
  auto r = make_report(id, Quantity::exponent, "exp(M^(" + cstr(ctx.c()) + ")(G))", lhs, Relation::less_equal,
                       "p^(e*ceil(t/2))", ctx.p_power(BigInt(ctx.e()) * ((t + 1) / 2)), "informational, not verified");
  r.verdict = Verdict::informational;
  return r;
}

/// The classical c = 1 inequalities for the Schur multiplier M(G).
inline std::vector<BoundReport> jones_c1_suite(const BoundContext& ctx) {
  using namespace detail;
  std::vector<BoundReport> out;
  const auto& m = ctx.schur_multiplier();
  std::optional<BoundValue> g_prime_m, m_exp, m_gens;
  if (m) {
    g_prime_m = PValue::of(ctx.gamma_order(2)) * PValue::order_of(m->value);
    m_exp = PValue::exponent_of(m->value);
    m_gens = BigInt(m->value.rank());
  }
  if (!ctx.p_group()) {
    for (const auto* id : {"theorem6", "corollary8.lower", "corollary8.upper"})
      out.push_back(not_applicable(id, Quantity::order, "not_p_group"));
    out.push_back(not_applicable("corollary17", Quantity::generators, "not_p_group"));
    for (const auto* id : {"corollary18", "corollary20", "corollary20.improves18"})
      out.push_back(not_applicable(id, Quantity::exponent, "not_p_group"));
    return out;
  }
  const BigInt n = ctx.n(), k = ctx.k(), e = ctx.e();
  const unsigned t = ctx.t().value_or(0);
  out.push_back(make_report("theorem6", Quantity::order, "|G'|*|M(G)|", g_prime_m, Relation::less_equal,
                            "p^((n-k)(n+k-1)/2)", ctx.p_power((n - k) * (n + k - 1) / 2)));
  if (ctx.d()) {
    const BigInt d = *ctx.d();
    out.push_back(make_report("corollary8.lower", Quantity::order, "p^(d(d-1)/2)",
                              ctx.p_power(d * (d == 0 ? BigInt(0) : BigInt(d - 1)) / 2), Relation::less_equal, "|G'|*|M(G)|",
                              g_prime_m));
  } else {
    out.push_back(not_applicable("corollary8.lower", Quantity::order, "generator_cap_exceeded"));
  }
  out.push_back(make_report("corollary8.upper", Quantity::order, "|G'|*|M(G)|", g_prime_m, Relation::less_equal,
                            "p^(n(n-1)/2)", ctx.p_power(n * (n == 0 ? BigInt(0) : BigInt(n - 1)) / 2)));
  if (ctx.r()) {
    const BigInt r = *ctx.r();
    const BigInt rhs = t == 0 ? BigInt(0) : r * ((2 * t - 1) * r - 1) / 2;
    out.push_back(make_report("corollary17", Quantity::generators, "d(M(G))", m_gens, Relation::less_equal,
                              "r((2t-1)r-1)/2", rhs));
  } else {
    out.push_back(not_applicable("corollary17", Quantity::generators, "rank_cap_exceeded"));
  }
  out.push_back(make_report("corollary18", Quantity::exponent, "exp(M(G))", m_exp, Relation::less_equal, "p^(e*t)",
                            ctx.p_power(e * t)));
  if (t >= 2) {
    out.push_back(make_report("corollary20", Quantity::exponent, "exp(M(G))", m_exp, Relation::less_equal,
                              "p^(e*(t-1))", ctx.p_power(e * (t - 1))));
    out.push_back(make_report("corollary20.improves18", Quantity::exponent, "p^(e*(t-1))",
                              ctx.p_power(e * (t - 1)), Relation::divides, "p^(e*t)", ctx.p_power(e * t)));
  } else {
    out.push_back(not_applicable("corollary20", Quantity::exponent, "class_below_2"));
    out.push_back(not_applicable("corollary20.improves18", Quantity::exponent, "class_below_2"));
  }
  return out;
}

/// Every report for the context, in a fixed order. The c = 1 suite is
/// included only when c = 1.
inline std::vector<BoundReport> all_reports(const BoundContext& ctx) {
  std::vector<BoundReport> out;
  auto [lo, hi] = corollary12(ctx);
  out.push_back(std::move(lo));
  out.push_back(std::move(hi));
  out.push_back(theorem_A(ctx));
  for (auto& r : theorem_B(ctx)) out.push_back(std::move(r));
  for (auto& r : theorem_C(ctx)) out.push_back(std::move(r));
  out.push_back(corollary26(ctx));
  out.push_back(corollary27(ctx));
  out.push_back(corollary27_pet(ctx));
  out.push_back(ellis_exponent(ctx));
  if (ctx.c() == 1)
    for (auto& r : jones_c1_suite(ctx)) out.push_back(std::move(r));
  return out;
}

struct ComparisonRow {
  std::string id;
  PValue rhs;
  bool tightest = false;
  std::vector<std::string> strictly_below;  // ids of rows with a larger bound
};

struct BoundComparison {
  std::string target;
  std::vector<ComparisonRow> rows;  // ascending by bound, ties by id

  const ComparisonRow* find(const std::string& id) const {
    for (const auto& r : rows)
      if (r.id == id) return &r;
    return nullptr;
  }
  /// True when every row has the same bound.
  bool all_tied() const { return rows.empty() || rows.front().rhs == rows.back().rhs; }
};

/// All known upper bounds on |gamma_{c+1}(G)||M^(c)(G)|, smallest first.
/// Rows attaining the minimum are flagged tightest unless every row ties.
inline BoundComparison compare_bounds(const BoundContext& ctx) {
  const unsigned c = ctx.c();
  BoundComparison cmp;
  cmp.target = "|gamma_" + std::to_string(c + 1) + "(G)|*|M^(" + std::to_string(c) + ")(G)|";
  auto take = [&](const BoundReport& r) {
    if (!r.applicable || !r.rhs) return;
    cmp.rows.push_back({r.id, std::get<PValue>(*r.rhs), false, {}});
  };
  take(corollary12(ctx).second);
  take(theorem_A(ctx));
  take(theorem_B(ctx)[0]);
  auto c_order = theorem_C(ctx)[0];
  if (c_order.applicable && c_order.note == "case c+1>t") take(c_order);
  if (c == 1) {
    for (const auto& r : jones_c1_suite(ctx))
      if (r.id == "theorem6" || r.id == "corollary8.upper") take(r);
  }
  std::sort(cmp.rows.begin(), cmp.rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.rhs != b.rhs) return a.rhs < b.rhs;
    return a.id < b.id;
  });
  for (auto& row : cmp.rows)
    for (const auto& other : cmp.rows)
      if (row.rhs < other.rhs) row.strictly_below.push_back(other.id);
  if (!cmp.all_tied())
    for (auto& row : cmp.rows) row.tightest = row.rhs == cmp.rows.front().rhs;
  return cmp;
}

}  // namespace nilmult
