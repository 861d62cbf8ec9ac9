#include "cthecke/qsym.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cthecke {

void Polynomial::add_term(const std::vector<int>& expo, const Rational& coeff) {
    if (static_cast<int>(expo.size()) != nvars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(expo, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            os << "*x" << (v + 1);
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

bool is_quasisymmetric(const Polynomial& p) {
    // canonical representative of a monomial: its nonzero exponents in
    // variable order
    std::map<std::vector<int>, Rational> by_comp;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> comp;
        for (int v : e)
            if (v != 0) comp.push_back(v);
        auto [it, inserted] = by_comp.emplace(comp, c);
        if (!inserted && it->second != c) return false;
    }
    // every monomial with a given exponent composition must be present
    for (const auto& [comp, c] : by_comp) {
        const int k = static_cast<int>(comp.size());
        std::vector<int> idx(k);
        // count placements of the composition into nvars ordered slots
        long long expected = 1;
        for (int t = 0; t < k; ++t) expected = expected * (p.nvars() - t) / (t + 1);
        long long got = 0;
        for (const auto& [e, cc] : p.terms()) {
            std::vector<int> c2;
            for (int v : e)
                if (v != 0) c2.push_back(v);
            if (c2 == comp) ++got;
        }
        if (got != expected) return false;
    }
    return true;
}

Composition descent_set_to_composition(const std::set<int>& s, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        if (x < 1 || x > n - 1) throw std::out_of_range("descent_set_to_composition: element out of [1, n-1]");
        parts.push_back(x - prev);
        prev = x;
    }
    if (n - prev > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::set<int> composition_to_descent_set(const Composition& alpha) {
    std::set<int> s;
    int acc = 0;
    for (int i = 1; i < alpha.length(); ++i) {
        acc += alpha.part(i);
        s.insert(acc);
    }
    return s;
}

namespace {

void fundamental_rec(int pos, int n, int m, int min_var, const std::set<int>& strict,
                     std::vector<int>& expo, Polynomial& out) {
    if (pos == n) {
        out.add_term(expo, Rational(1));
        return;
    }
    for (int v = min_var; v <= m; ++v) {
        ++expo[v - 1];
        int next_min = strict.count(pos + 1) ? v + 1 : v;
        fundamental_rec(pos + 1, n, m, next_min, strict, expo, out);
        --expo[v - 1];
    }
}

}  // namespace

Polynomial fundamental(const std::set<int>& s, int n, int m) {
    if (m < 1) throw std::invalid_argument("fundamental: need at least one variable");
    Polynomial out(m);
    std::vector<int> expo(m, 0);
    fundamental_rec(0, n, m, 1, s, expo, out);
    return out;
}

Polynomial quasischur(const Composition& alpha, int m) {
    const int n = alpha.size();
    Polynomial out(m);
    for (const Tableau& t : enumerate_sct(SkewShape(alpha)))
        out += fundamental(descent_data(t).descents, n, m);
    return out;
}

namespace {

// standard Young tableaux by row-insertion growth; only descent sets are
// needed so cells are tracked per entry
void syt_rec(const std::vector<int>& lambda, std::vector<int>& rows, int k, int n,
             std::vector<int>& row_of_entry, std::vector<std::set<int>>& descent_sets) {
    if (k > n) {
        std::set<int> des;
        for (int i = 1; i < n; ++i)
            if (row_of_entry[i + 1] > row_of_entry[i]) des.insert(i);
        descent_sets.push_back(std::move(des));
        return;
    }
    for (size_t r = 0; r < lambda.size(); ++r) {
        if (rows[r] >= lambda[r]) continue;
        if (r > 0 && rows[r] >= rows[r - 1]) continue;
        ++rows[r];
        row_of_entry[k] = static_cast<int>(r);
        syt_rec(lambda, rows, k + 1, n, row_of_entry, descent_sets);
        --rows[r];
    }
}

}  // namespace

Polynomial schur(const Composition& lambda, int m) {
    if (!lambda.is_partition()) throw std::invalid_argument("schur: index must be a partition");
    const int n = lambda.size();
    std::vector<int> rows(lambda.length(), 0);
    std::vector<int> row_of_entry(n + 1, 0);
    std::vector<std::set<int>> descent_sets;
    syt_rec(lambda.parts(), rows, 1, n, row_of_entry, descent_sets);

    Polynomial out(m);
    for (const auto& des : descent_sets) out += fundamental(des, n, m);
    return out;
}

std::vector<Composition> characteristic(const std::vector<Tableau>& basis) {
    std::vector<Composition> chi;
    chi.reserve(basis.size());
    for (const Tableau& t : basis)
        chi.push_back(descent_set_to_composition(descent_data(t).descents, t.size()));
    std::sort(chi.begin(), chi.end());
    return chi;
}

std::vector<Composition> characteristic(const ClassPoset& e) { return characteristic(e.members()); }

Polynomial expand_characteristic(const std::vector<Composition>& chi, int m) {
    Polynomial out(m);
    for (const Composition& alpha : chi)
        out += fundamental(composition_to_descent_set(alpha), alpha.size(), m);
    return out;
}

}  // namespace cthecke
