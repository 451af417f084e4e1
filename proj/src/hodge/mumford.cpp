// Reduction modulo the Mumford relations c(E)c(E^dual) = 1.
//
// The relation ideal is homogeneous for the grading deg c_i = i, so each
// weighted degree D is handled independently: the degree-D part of the ideal
// is spanned by q * R_k (k even, deg q = D - k), where
// R_k = sum_j (-1)^j c_j c_{k-j}. Row-reducing that span with monomials in
// descending lexicographic order gives a triangular rewrite system whose
// pivots are replaced by combinations of non-pivot (standard) monomials. The
// result is a canonical normal form.

#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace ovk {
namespace {

using ChernExponents = std::vector<int>;
using SparseRow = std::map<int, Rational>;

struct DegreeRules {
  std::vector<ChernExponents> monomials;  // descending lex order; index = column
  std::map<ChernExponents, int> column;
  std::map<int, SparseRow> pivots;  // pivot column -> full RREF row (pivot coefficient 1)
};

std::vector<ChernExponents> monomials_of_degree(int genus, int degree) {
  std::vector<ChernExponents> out;
  ChernExponents e(static_cast<std::size_t>(genus), 0);
  std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == 0) {
      if (remaining == 0) out.push_back(e);
      return;
    }
    for (int k = 0; k * index <= remaining; ++k) {
      e[static_cast<std::size_t>(index - 1)] = k;
      rec(index - 1, remaining - k * index);
    }
    e[static_cast<std::size_t>(index - 1)] = 0;
  };
  if (genus == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(genus, degree);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// R_k as a map from exponent vectors to coefficients.
std::map<ChernExponents, Rational> relation(int genus, int k) {
  std::map<ChernExponents, Rational> out;
  for (int j = 0; j <= k; ++j) {
    const int i = k - j;
    if (j > genus || i > genus) continue;
    ChernExponents e(static_cast<std::size_t>(genus), 0);
    if (j > 0) e[static_cast<std::size_t>(j - 1)] += 1;
    if (i > 0) e[static_cast<std::size_t>(i - 1)] += 1;
    out[e] += (j % 2 == 0) ? Rational(1) : Rational(-1);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void subtract_scaled(SparseRow& row, const Rational& factor, const SparseRow& other) {
  for (const auto& [col, c] : other) {
    auto [it, inserted] = row.emplace(col, -(factor * c));
    if (!inserted) {
      it->second -= factor * c;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

std::unique_ptr<DegreeRules> build_rules(int genus, int degree) {
  auto rules = std::make_unique<DegreeRules>();
  rules->monomials = monomials_of_degree(genus, degree);
  for (std::size_t i = 0; i < rules->monomials.size(); ++i) {
    rules->column[rules->monomials[i]] = static_cast<int>(i);
  }
  for (int k = 2; k <= std::min(degree, 2 * genus); k += 2) {
    const auto rel = relation(genus, k);
    if (rel.empty()) continue;
    for (const auto& q : monomials_of_degree(genus, degree - k)) {
      SparseRow row;
      for (const auto& [e, c] : rel) {
        ChernExponents prod = e;
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += q[i];
        row[rules->column.at(prod)] += c;
      }
      std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
      while (!row.empty()) {
        const int lead = row.begin()->first;
        auto pivot = rules->pivots.find(lead);
        if (pivot == rules->pivots.end()) {
          const Rational inv = Rational(1) / row.begin()->second;
          for (auto& [col, c] : row) c *= inv;
          rules->pivots.emplace(lead, std::move(row));
          break;
        }
        const Rational factor = row.begin()->second;
        subtract_scaled(row, factor, pivot->second);
      }
    }
  }
  // Back-substitution, highest pivot column first, so every rule mentions
  // only standard monomials besides its own pivot.
  for (auto it = rules->pivots.rbegin(); it != rules->pivots.rend(); ++it) {
    SparseRow& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto col_it = std::next(row.begin()); col_it != row.end(); ++col_it) {
        auto other = rules->pivots.find(col_it->first);
        if (other == rules->pivots.end()) continue;
        const Rational factor = col_it->second;
        subtract_scaled(row, factor, other->second);
        changed = true;
        break;
      }
    }
  }
  return rules;
}

class MumfordSystem {
 public:
  explicit MumfordSystem(int genus) : genus_(genus) {}

  const DegreeRules& rules_for(int degree) {
    std::lock_guard lock(mutex_);
    auto it = by_degree_.find(degree);
    if (it == by_degree_.end()) it = by_degree_.emplace(degree, build_rules(genus_, degree)).first;
    return *it->second;
  }

 private:
  int genus_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<DegreeRules>> by_degree_;
};

MumfordSystem& system_for(int genus) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MumfordSystem>> systems;
  std::lock_guard lock(mutex);
  auto it = systems.find(genus);
  if (it == systems.end()) it = systems.emplace(genus, std::make_unique<MumfordSystem>(genus)).first;
  return *it->second;
}

}  // namespace

HodgeExpr mumford_reduce(const HodgeExpr& expr) {
  const int genus = expr.genus();
  HodgeExpr out(genus);
  if (genus == 0) return expr;
  auto& system = system_for(genus);
  for (const auto& [m, c] : expr.terms()) {
    const int degree = m.chern_degree();
    if (degree < 2) {
      out.add_term(m, c);
      continue;
    }
    const auto& rules = system.rules_for(degree);
    const int col = rules.column.at(m.chern);
    auto pivot = rules.pivots.find(col);
    if (pivot == rules.pivots.end()) {
      out.add_term(m, c);
      continue;
    }
    for (const auto& [other, r] : pivot->second) {
      if (other == col) continue;
      out.add_term(HodgeMonomial{m.lambda_power, rules.monomials[static_cast<std::size_t>(other)]}, -(c * r));
    }
  }
  return out;
}

int mumford_quotient_dimension(int genus, int degree) {
  if (degree < 0) return 0;
  if (genus == 0) return degree == 0 ? 1 : 0;
  const auto& rules = system_for(genus).rules_for(degree);
  return static_cast<int>(rules.monomials.size() - rules.pivots.size());
}

bool lambda_product_identity(int genus) {
  if (genus < 0) throw InvalidArgument("negative genus");
  const HodgeExpr lhs = HodgeExpr::dual_twisted_top_chern(genus, Rational(1)) *
                        HodgeExpr::dual_twisted_top_chern(genus, Rational(-1));
  const HodgeExpr rhs = Rational(genus % 2 == 0 ? 1 : -1) * HodgeExpr::lambda(genus, 2 * genus);
  return mumford_reduce(lhs) == mumford_reduce(rhs);
}

}  // namespace ovk
