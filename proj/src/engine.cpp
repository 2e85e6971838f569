#include "rdbound/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <tuple>

#include "rdbound/error.hpp"
#include "rdbound/molien.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/sl2_chars.hpp"

namespace rdbound {

namespace {

int64_t count_at(const InvariantCounts& m, int d) {
  auto it = m.find(d);
  return it == m.end() ? 0 : it->second;
}

auto winner_key(const std::vector<int>& d, int64_t product) {
  return std::make_tuple(-static_cast<int64_t>(d.size()), product, d);
}

}  // namespace

std::string blocker_string(unsigned blockers) {
  if (blockers == kNoBlocker) return "none";
  std::string s;
  auto add = [&](const char* name) { s += s.empty() ? name : std::string("+") + name; };
  if (blockers & kIrreducibility) add("irreducibility");
  if (blockers & kLadderCondition) add("ladder");
  if (blockers & kNoInvariants) add("no-invariants");
  return s;
}

std::string row_class_name(RowClass c) {
  switch (c) {
    case RowClass::NoImprovement: return "no-improvement";
    case RowClass::IrreducibilityBlocked: return "irreducibility-blocked";
    case RowClass::LadderBlocked: return "ladder-blocked";
  }
  return "unknown";
}

std::string BoundCertificate::degree_string() const {
  if (degrees.empty()) return "None";
  std::string s;
  for (size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s;
}

int64_t free_algebra_dim(const std::vector<int>& generator_degrees, int d) {
  if (d < 0) return 0;
  std::vector<int64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (int g : generator_degrees) {
    if (g < 1) throw Error(ErrorCode::InvalidArgument, "generator degrees must be positive");
    for (int x = g; x <= d; ++x) ways[x] += ways[x - g];
  }
  return ways[d];
}

int64_t available_count(const InvariantCounts& m, const std::vector<int>& chosen, int d) {
  return std::max<int64_t>(0, count_at(m, d) - free_algebra_dim(chosen, d));
}

bool admissible(const InvariantCounts& m, std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  for (size_t i = 0; i < degrees.size(); ++i) {
    std::vector<int> prefix(degrees.begin(), degrees.begin() + i);
    if (available_count(m, prefix, degrees[i]) < 1) return false;
  }
  return true;
}

BoundCertificate select_degrees(const InvariantCounts& m, int64_t dim, int64_t mu, const RdLadder& ladder, int K) {
  std::vector<int> best;
  int64_t best_product = 1;
  std::vector<int> cur;
  std::function<void(int64_t)> dfs = [&](int64_t product) {
    for (int x = cur.empty() ? 2 : cur.back(); x <= K; ++x) {
      const int64_t p = product * x;
      if (p >= mu) break;
      if (available_count(m, cur, x) < 1) continue;
      const int64_t budget = dim - 1 - static_cast<int64_t>(cur.size()) - 1;
      if (ladder.rd_upper(p) > budget) continue;
      cur.push_back(x);
      if (winner_key(cur, p) < winner_key(best, best_product)) {
        best = cur;
        best_product = p;
      }
      dfs(p);
      cur.pop_back();
    }
  };
  dfs(1);

  BoundCertificate c;
  c.dim = dim;
  c.mu = mu;
  c.max_degree = K;
  for (int d = 2; d <= K; ++d) c.counts[d] = count_at(m, d);
  c.degrees = best;
  for (size_t i = 0; i < best.size(); ++i)
    c.available.push_back(available_count(m, std::vector<int>(best.begin(), best.begin() + i), best[i]));
  c.product = best_product;
  c.rd_product = ladder.rd_upper(best_product);
  c.bound = dim - 1 - c.r();

  bool any = false;
  for (int x = 2; x <= K; ++x) {
    std::vector<int> ext = best;
    ext.push_back(x);
    std::sort(ext.begin(), ext.end());
    if (!admissible(m, ext)) continue;
    any = true;
    if (c.next_degree == 0) c.next_degree = x;
    ExtensionCheck e;
    e.degree = x;
    e.available = available_count(m, best, x);
    e.product = best_product * x;
    e.rd_product = ladder.rd_upper(e.product);
    e.budget = dim - 1 - c.r() - 1;
    e.irreducibility_fails = e.product >= mu;
    e.ladder_fails = e.rd_product > e.budget;
    if (e.irreducibility_fails) c.blockers |= kIrreducibility;
    if (e.ladder_fails) c.blockers |= kLadderCondition;
    c.extensions.push_back(e);
  }
  if (!any) {
    c.blockers |= kNoInvariants;
    c.next_degree = K + 1;
  }
  c.notes.push_back("algebraic independence of the chosen invariants is assumed, not verified");
  return c;
}

std::vector<std::string> verify_certificate(const BoundCertificate& c, const RdLadder& ladder) {
  std::vector<std::string> fails;
  int64_t product = 1;
  for (int d : c.degrees) product *= d;
  if (!std::is_sorted(c.degrees.begin(), c.degrees.end())) fails.push_back("degrees not sorted");
  if (product != c.product) fails.push_back("recorded product differs from the degree product");
  if (!c.degrees.empty() && product >= c.mu) fails.push_back("product is not below mu");
  if (!c.degrees.empty() && ladder.rd_upper(product) > c.dim - 1 - c.r())
    fails.push_back("rd_upper(product) exceeds dim V - 1 - r");
  if (c.bound != c.dim - 1 - c.r()) fails.push_back("bound is not dim V - 1 - r");
  // Degree d consumes one independent invariant beyond the monomials in the lower ones.
  for (size_t i = 0; i < c.degrees.size(); ++i) {
    const int d = c.degrees[i];
    int64_t monomials = 0;
    std::vector<int64_t> ways(d + 1, 0);
    ways[0] = 1;
    for (size_t j = 0; j < i; ++j)
      for (int x = c.degrees[j]; x <= d; ++x) ways[x] += ways[x - c.degrees[j]];
    monomials = ways[d];
    auto it = c.counts.find(d);
    const int64_t md = it == c.counts.end() ? 0 : it->second;
    if (md - monomials < 1) fails.push_back("degree " + std::to_string(d) + " exceeds the available invariants");
  }
  return fails;
}

std::vector<int> exhaustive_best(const InvariantCounts& m, int64_t dim, int64_t mu, const RdLadder& ladder, int K) {
  std::vector<std::vector<int>> all{{}};
  for (size_t i = 0; i < all.size(); ++i) {
    int64_t p = 1;
    for (int d : all[i]) p *= d;
    for (int x = all[i].empty() ? 2 : all[i].back(); x <= K && p * x < mu; ++x) {
      auto next = all[i];
      next.push_back(x);
      all.push_back(std::move(next));
    }
  }
  std::vector<int> best;
  int64_t best_p = 1;
  for (const auto& d : all) {
    int64_t p = 1;
    for (int x : d) p *= x;
    const int64_t r = static_cast<int64_t>(d.size());
    if (d.empty() || !admissible(m, d) || ladder.rd_upper(p) > dim - 1 - r) continue;
    if (winner_key(d, p) < winner_key(best, best_p)) {
      best = d;
      best_p = p;
    }
  }
  return best;
}

AsymptoticResult asymptotic_bound(uint32_t q, const RdLadder& ladder) {
  if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q < 23) throw Error(ErrorCode::InvalidArgument, "the asymptotic bound needs q >= 23");
  const int64_t Q = q;
  const int64_t cap = Q * Q - Q + 6;
  AsymptoticResult a;
  a.q = q;
  int64_t pow4 = 4;
  for (int r = 1; pow4 + r <= cap; ++r, pow4 *= 4) a.r = r;
  a.bound = Q * Q - Q - 1 - a.r;
  a.formula = static_cast<double>(Q * Q - Q) - std::log(static_cast<double>(cap)) / std::log(4.0);
  a.quartics = closed_form_m4(q);
  if (a.quartics < a.r)
    throw Error(ErrorCode::InsufficientQuartics, "q = " + std::to_string(q) + ": m4 = " + std::to_string(a.quartics) +
                                                     " < r = " + std::to_string(a.r));
  int64_t product = 1;
  for (int i = 0; i < a.r; ++i) product *= 4;
  if (product >= Q * Q * Q + 1 || ladder.rd_upper(product) > Q * Q - Q - 1 - a.r)
    throw Error(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + ": all-quartic premises fail");
  return a;
}

int default_max_degree(Family f) { return f == Family::PSU2 ? 8 : 6; }

int64_t representation_dim(Family f, uint32_t q) {
  if (f == Family::PSU3) return static_cast<int64_t>(q) * q - q;
  return smallest_projective_character(q).degree;
}

InvariantCounts invariant_counts(Family f, uint32_t q, int K) {
  const auto input = f == Family::PSU2 ? psl2_molien_input(q, K) : psu3_molien_input(q, K);
  const auto prefix = molien_prefix(input, K);
  InvariantCounts m;
  for (int d = 2; d <= K; ++d) m[d] = to_int64(Rational(prefix[d]));
  return m;
}

BoundCertificate certify(Family f, uint32_t q, const TableOptions& opts) {
  const RdLadder& ladder = opts.ladder ? *opts.ladder : RdLadder::active();
  const int K = opts.max_degree > 0 ? opts.max_degree : default_max_degree(f);
  const int64_t m = table_mu(f, q, opts.paper_compat);
  const int64_t dim = representation_dim(f, q);
  BoundCertificate c = select_degrees(invariant_counts(f, q, K), dim, m, ladder, K);
  c.family = f;
  c.q = q;
  c.bound_mu = ladder.rd_upper(m, opts.paper_compat);
  c.known_bound = ladder.known_bound(f, q);
  const bool improves = c.r() > 0 && c.bound <= c.bound_mu && (!c.known_bound || c.bound < *c.known_bound);
  if (!improves)
    c.row_class = RowClass::NoImprovement;
  else if (c.product * c.next_degree >= c.mu)
    c.row_class = RowClass::IrreducibilityBlocked;
  else
    c.row_class = RowClass::LadderBlocked;
  if (f == Family::PSU3 && q == 2) c.notes.push_back("PSU(3,2) is not simple; row kept for table completeness");
  return c;
}

TableRow make_row(Family f, uint32_t q, const TableOptions& opts) {
  TableRow row;
  row.family = f;
  row.q = q;
  row.flagged = is_compat_flagged(f, q);
  try {
    row.cert = certify(f, q, opts);
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<TableRow> make_table(Family f, const std::vector<uint32_t>& qs, const TableOptions& opts, int jobs) {
  std::vector<TableRow> rows(qs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < qs.size();) rows[i] = make_row(f, qs[i], opts);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(qs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::vector<uint32_t> table_qs(Family f) { return prime_powers_up_to(f == Family::PSU2 ? 4 : 2, 125); }

}  // namespace rdbound
