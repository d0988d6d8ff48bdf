#include "colfan/lp.hpp"

#include <algorithm>
#include <map>

namespace colfan {

void LPProblem::add_equality(RatVec coeffs, Rational rhs) {
  require_dim(coeffs, num_vars, "LP equality");
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LPProblem::add_inequality(RatVec coeffs, Rational rhs) {
  require_dim(coeffs, num_vars, "LP inequality");
  inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

bool LPProblem::satisfied_by(const RatVec& x) const {
  if (x.size() != num_vars) return false;
  for (const auto& c : equalities)
    if (dot(c.coeffs, x) != c.rhs) return false;
  for (const auto& c : inequalities)
    if (dot(c.coeffs, x) < c.rhs) return false;
  return true;
}

namespace {

// Dense phase-1 tableau. Columns: u (n), v (n), surplus (one per inequality),
// artificial (one per row that needs it). x = u - v.
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const LPProblem& lp) : n_(lp.num_vars) {
    const std::size_t m_ineq = lp.inequalities.size();
    struct Row {
      RatVec structural;  // length 2n + m_ineq
      Rational rhs;
      std::optional<std::size_t> basic_slack;
    };
    std::vector<Row> raw;
    const std::size_t width = 2 * n_ + m_ineq;

    for (const auto& c : lp.equalities) {
      Row r{RatVec(width), c.rhs, std::nullopt};
      for (std::size_t j = 0; j < n_; ++j) {
        r.structural[j] = c.coeffs[j];
        r.structural[n_ + j] = -c.coeffs[j];
      }
      raw.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < m_ineq; ++i) {
      const auto& c = lp.inequalities[i];
      Row r{RatVec(width), c.rhs, std::nullopt};
      for (std::size_t j = 0; j < n_; ++j) {
        r.structural[j] = c.coeffs[j];
        r.structural[n_ + j] = -c.coeffs[j];
      }
      r.structural[2 * n_ + i] = -1;
      if (c.rhs <= 0) r.basic_slack = 2 * n_ + i;
      raw.push_back(std::move(r));
    }
    for (auto& r : raw) {
      if (r.rhs < 0 || (r.basic_slack && r.rhs == 0)) {
        for (auto& x : r.structural) x = -x;
        r.rhs = -r.rhs;
      }
    }

    std::size_t num_art = 0;
    for (const auto& r : raw)
      if (!r.basic_slack) ++num_art;
    first_art_ = width;
    cols_ = width + num_art;

    std::size_t art = first_art_;
    for (auto& r : raw) {
      RatVec row(cols_ + 1);
      std::copy(r.structural.begin(), r.structural.end(), row.begin());
      row[cols_] = r.rhs;
      if (r.basic_slack) {
        basis_.push_back(*r.basic_slack);
      } else {
        row[art] = 1;
        basis_.push_back(art++);
      }
      tab_.push_back(std::move(row));
    }

    // Reduced costs of the phase-1 objective: sum of artificials.
    cost_.assign(cols_ + 1, 0);
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (j < first_art_ || j == cols_) cost_[j] -= tab_[i][j];
    }
  }

  std::optional<RatVec> solve() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) break;

      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][cols_] / tab_[i][enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      // Phase 1 is bounded below by 0, so an entering column always has a leaving row.
      pivot(*leave, enter);
    }

    // -cost_[rhs] is the remaining sum of artificials.
    if (cost_[cols_] != 0) return std::nullopt;

    RatVec values(cols_);
    for (std::size_t i = 0; i < tab_.size(); ++i) values[basis_[i]] = tab_[i][cols_];
    RatVec x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = values[j] - values[n_ + j];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / tab_[r][c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (tab_[r][j] == 0) continue;
      tab_[r][j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](RatVec& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * tab_[r][j];
    };
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (i != r) eliminate(tab_[i]);
    eliminate(cost_);
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t cols_ = 0;
  std::size_t first_art_ = 0;
  std::vector<RatVec> tab_;
  RatVec cost_;
  std::vector<std::size_t> basis_;
};

// Scales a constraint by a positive factor so that its coefficients are
// primitive integers; the zero row is left alone.
LinearConstraint normalized(const LinearConstraint& c) {
  if (is_zero(c.coeffs)) return c;
  const RatVec p = primitive(c.coeffs);
  std::size_t j = 0;
  while (c.coeffs[j] == 0) ++j;
  const Rational factor = p[j] / c.coeffs[j];  // positive: primitive() keeps orientation
  return {p, c.rhs * factor};
}

}  // namespace

std::optional<RatVec> lp_feasible(const LPProblem& lp) {
  for (const auto& c : lp.equalities) require_dim(c.coeffs, lp.num_vars, "LP equality");
  for (const auto& c : lp.inequalities) require_dim(c.coeffs, lp.num_vars, "LP inequality");
  PhaseOneTableau t(lp);
  return t.solve();
}

bool fourier_motzkin(const LPProblem& lp, std::size_t var_cap) {
  const std::size_t n = lp.num_vars;
  std::vector<LinearConstraint> eqs = lp.equalities;
  std::vector<LinearConstraint> ineqs = lp.inequalities;
  std::vector<bool> alive(n, true);

  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const auto& eq = eqs[e];
    std::size_t j = 0;
    while (j < n && eq.coeffs[j] == 0) ++j;
    if (j == n) {
      if (eq.rhs != 0) return false;
      continue;
    }
    auto substitute = [&](LinearConstraint& c) {
      if (c.coeffs[j] == 0) return;
      const Rational f = c.coeffs[j] / eq.coeffs[j];
      c.coeffs = sub(c.coeffs, scale(eq.coeffs, f));
      c.rhs -= f * eq.rhs;
    };
    for (std::size_t k = e + 1; k < eqs.size(); ++k) substitute(eqs[k]);
    for (auto& c : ineqs) substitute(c);
    alive[j] = false;
  }

  const auto remaining = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
  if (remaining > var_cap)
    throw FourierMotzkinCapExceeded("Fourier-Motzkin: " + std::to_string(remaining) +
                                    " variables exceed the cap of " + std::to_string(var_cap));

  // Keeps only the tightest right-hand side per coefficient direction.
  auto tidy = [](const std::vector<LinearConstraint>& in,
                 std::vector<LinearConstraint>& out) -> bool {
    std::map<RatVec, Rational> strongest;
    for (const auto& raw : in) {
      auto c = normalized(raw);
      if (is_zero(c.coeffs)) {
        if (c.rhs > 0) return false;
        continue;
      }
      auto [it, fresh] = strongest.emplace(c.coeffs, c.rhs);
      if (!fresh && c.rhs > it->second) it->second = c.rhs;
    }
    out.clear();
    for (auto& [coeffs, rhs] : strongest) out.push_back({coeffs, rhs});
    return true;
  };

  std::vector<LinearConstraint> system;
  if (!tidy(ineqs, system)) return false;

  for (;;) {
    std::optional<std::size_t> pick;
    std::size_t best_cost = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!alive[j]) continue;
      std::size_t p = 0, q = 0;
      for (const auto& c : system) {
        if (c.coeffs[j] > 0) ++p;
        if (c.coeffs[j] < 0) ++q;
      }
      const std::size_t cost = p * q;
      if (!pick || cost < best_cost) {
        pick = j;
        best_cost = cost;
      }
    }
    if (!pick) break;
    const std::size_t j = *pick;
    alive[j] = false;

    std::vector<LinearConstraint> pos, neg, next;
    for (auto& c : system) {
      if (c.coeffs[j] > 0)
        pos.push_back(c);
      else if (c.coeffs[j] < 0)
        neg.push_back(c);
      else
        next.push_back(c);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Rational wp = -q.coeffs[j];
        const Rational wq = p.coeffs[j];
        next.push_back({add(scale(p.coeffs, wp), scale(q.coeffs, wq)), p.rhs * wp + q.rhs * wq});
      }
    if (!tidy(next, system)) return false;
  }
  return true;
}

}  // namespace colfan
