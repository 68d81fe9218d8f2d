#include "termcut/lp.hpp"

#include <algorithm>

#include "termcut/error.hpp"

namespace termcut {

int LPProblem::add_variable(const std::string& name, bool nonnegative) {
    variable_names.push_back(name);
    objective.push_back(Rat(0));
    nonneg.push_back(nonnegative);
    return static_cast<int>(variable_names.size()) - 1;
}

void LPProblem::add_objective(int var, const Rat& coeff) { objective[var] += coeff; }

namespace {

// Dense tableau: rows 0..m-1 are constraints, row m is the reduced-cost
// row; the last column is the right-hand side.
class Simplex {
   public:
    Simplex(int rows, int cols) : m_(rows), n_(cols) {
        tab_.assign(m_ + 1, std::vector<Rat>(n_ + 1, Rat(0)));
        basis_.assign(m_, -1);
    }

    Rat& at(int r, int c) { return tab_[r][c]; }
    Rat& rhs(int r) { return tab_[r][n_]; }
    int& basis(int r) { return basis_[r]; }

    // Rebuilds the reduced-cost row for the given per-column costs.
    void load_objective(const std::vector<Rat>& cost) {
        for (int j = 0; j <= n_; ++j) tab_[m_][j] = 0;
        for (int j = 0; j < n_; ++j) tab_[m_][j] = cost[j];
        for (int r = 0; r < m_; ++r) {
            const Rat& cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (int j = 0; j <= n_; ++j)
                if (tab_[r][j] != 0) tab_[m_][j] -= cb * tab_[r][j];
        }
    }

    // Minimizes the loaded objective with Bland's rule. Returns false when
    // unbounded below. `allowed` masks columns eligible to enter.
    bool run(const std::vector<char>& allowed) {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < n_; ++j) {
                if (allowed[j] && tab_[m_][j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == -1) return true;

            int leaving = -1;
            Rat best_ratio;
            for (int r = 0; r < m_; ++r) {
                if (tab_[r][entering] <= 0) continue;
                Rat ratio = tab_[r][n_] / tab_[r][entering];
                if (leaving == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == -1) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(int r, int c) {
        std::vector<Rat>& prow = tab_[r];
        Rat inv = 1 / prow[c];
        if (inv != 1)
            for (int j = 0; j <= n_; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        for (int i = 0; i <= m_; ++i) {
            if (i == r) continue;
            Rat factor = tab_[i][c];
            if (factor == 0) continue;
            std::vector<Rat>& row = tab_[i];
            for (int j = 0; j <= n_; ++j)
                if (prow[j] != 0) row[j] -= factor * prow[j];
        }
        basis_[r] = c;
    }

    Rat objective_value() const { return -tab_[m_][n_]; }

    int rows() const { return m_; }
    int cols() const { return n_; }

    // Drops a redundant all-zero row (used after phase one).
    void drop_row(int r) {
        tab_.erase(tab_.begin() + r);
        basis_.erase(basis_.begin() + r);
        --m_;
    }

   private:
    int m_, n_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<int> basis_;
};

}  // namespace

LPSolution solve_lp(const LPProblem& problem) {
    int nvars = problem.variable_count();
    for (const LinearConstraint& c : problem.constraints)
        for (const auto& [var, coeff] : c.terms)
            if (var < 0 || var >= nvars) throw InvalidInput("solve_lp: unknown variable");

    // Column layout: for each declared variable one column (plus a negated
    // twin for free variables), then one slack/surplus per inequality, then
    // artificials.
    std::vector<int> pos_col(nvars), neg_col(nvars, -1);
    int ncols = 0;
    for (int v = 0; v < nvars; ++v) {
        pos_col[v] = ncols++;
        if (!problem.nonneg[v]) neg_col[v] = ncols++;
    }
    int slack_base = ncols;
    int num_slacks = 0;
    for (const LinearConstraint& c : problem.constraints)
        if (c.sense != Sense::EQ) ++num_slacks;
    ncols += num_slacks;

    int m = static_cast<int>(problem.constraints.size());
    // Artificials: at most one per row.
    int art_base = ncols;
    ncols += m;

    Simplex sx(m, ncols);
    bool minimize = problem.direction == Direction::Minimize;

    int next_slack = slack_base;
    int num_artificials = 0;
    for (int r = 0; r < m; ++r) {
        const LinearConstraint& c = problem.constraints[r];
        // Row sign chosen so the right-hand side is nonnegative.
        bool flip = c.rhs < 0;
        Rat sign(flip ? -1 : 1);
        for (const auto& [var, coeff] : c.terms) {
            sx.at(r, pos_col[var]) += sign * coeff;
            if (neg_col[var] != -1) sx.at(r, neg_col[var]) -= sign * coeff;
        }
        sx.rhs(r) = sign * c.rhs;

        Sense sense = c.sense;
        if (flip && sense == Sense::LE) sense = Sense::GE;
        else if (flip && sense == Sense::GE) sense = Sense::LE;

        if (sense == Sense::LE) {
            sx.at(r, next_slack) = 1;
            sx.basis(r) = next_slack++;
        } else if (sense == Sense::GE) {
            sx.at(r, next_slack) = -1;
            ++next_slack;
            int art = art_base + num_artificials++;
            sx.at(r, art) = 1;
            sx.basis(r) = art;
        } else {
            int art = art_base + num_artificials++;
            sx.at(r, art) = 1;
            sx.basis(r) = art;
        }
    }

    std::vector<char> allowed(ncols, 1);

    // Phase one: drive the artificials to zero.
    if (num_artificials > 0) {
        std::vector<Rat> phase1_cost(ncols, Rat(0));
        for (int j = art_base; j < ncols; ++j) phase1_cost[j] = 1;
        sx.load_objective(phase1_cost);
        sx.run(allowed);  // bounded below by 0, cannot be unbounded
        if (sx.objective_value() != 0) return LPSolution{LPStatus::Infeasible, Rat(0), {}};

        // Pivot leftover artificials out of the basis; a row with no other
        // nonzero column is redundant and dropped.
        for (int r = sx.rows() - 1; r >= 0; --r) {
            if (sx.basis(r) < art_base) continue;
            int col = -1;
            for (int j = 0; j < art_base; ++j) {
                if (sx.at(r, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == -1)
                sx.drop_row(r);
            else
                sx.pivot(r, col);
        }
        for (int j = art_base; j < ncols; ++j) allowed[j] = 0;
    }

    // Phase two.
    std::vector<Rat> cost(ncols, Rat(0));
    for (int v = 0; v < nvars; ++v) {
        Rat c = problem.objective[v];
        if (minimize) {
            cost[pos_col[v]] = c;
            if (neg_col[v] != -1) cost[neg_col[v]] = -c;
        } else {
            cost[pos_col[v]] = -c;
            if (neg_col[v] != -1) cost[neg_col[v]] = c;
        }
    }
    sx.load_objective(cost);
    if (!sx.run(allowed)) return LPSolution{LPStatus::Unbounded, Rat(0), {}};

    std::vector<Rat> col_value(ncols, Rat(0));
    for (int r = 0; r < sx.rows(); ++r) col_value[sx.basis(r)] = sx.rhs(r);

    LPSolution solution;
    solution.status = LPStatus::Optimal;
    solution.assignment.resize(nvars);
    for (int v = 0; v < nvars; ++v) {
        solution.assignment[v] = col_value[pos_col[v]];
        if (neg_col[v] != -1) solution.assignment[v] -= col_value[neg_col[v]];
    }
    Rat value(0);
    for (int v = 0; v < nvars; ++v) value += problem.objective[v] * solution.assignment[v];
    solution.value = value;
    return solution;
}

}  // namespace termcut
