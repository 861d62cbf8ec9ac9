#include "cthecke/composition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cthecke {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const {
    return std::is_sorted(parts_.rbegin(), parts_.rend());
}

Composition Composition::partition_rearrangement() const {
    std::vector<int> p = parts_;
    std::sort(p.rbegin(), p.rend());
    return Composition(std::move(p));
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::optional<Composition> Composition::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return std::nullopt;
    std::string body = t.substr(1, t.size() - 2);
    std::vector<int> parts;
    if (!body.empty()) {
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
            int v = std::stoi(tok);
            if (v < 1) return std::nullopt;
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Composition(std::move(parts));
}

std::vector<Composition> covers_up(const Composition& beta) {
    const auto& b = beta.parts();
    std::vector<Composition> out;
    {
        std::vector<int> p;
        p.reserve(b.size() + 1);
        p.push_back(1);
        p.insert(p.end(), b.begin(), b.end());
        out.emplace_back(std::move(p));
    }
    for (size_t k = 0; k < b.size(); ++k) {
        bool topmost = true;
        for (size_t i = 0; i < k; ++i)
            if (b[i] == b[k]) { topmost = false; break; }
        if (!topmost) continue;
        std::vector<int> p = b;
        ++p[k];
        out.emplace_back(std::move(p));
    }
    return out;
}

std::vector<std::pair<RemovedCell, Composition>> covers_down(const Composition& alpha) {
    const auto& a = alpha.parts();
    std::vector<std::pair<RemovedCell, Composition>> out;
    if (!a.empty() && a[0] == 1)
        out.push_back({{1, 1, true}, Composition(std::vector<int>(a.begin() + 1, a.end()))});
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] < 2) continue;
        bool ok = true;
        for (size_t i = 0; i < k; ++i)
            if (a[i] == a[k] - 1) { ok = false; break; }
        if (!ok) continue;
        std::vector<int> p = a;
        --p[k];
        out.push_back({{static_cast<int>(k) + 1, a[k], false}, Composition(std::move(p))});
    }
    return out;
}

bool leq_c(const Composition& lo, const Composition& hi) {
    if (lo == hi) return true;
    if (lo.size() >= hi.size()) return false;
    // Walk down from hi until reaching lo's size; the down-set is small for
    // the sizes this engine handles (n <= 8).
    std::vector<Composition> layer{hi};
    for (int s = hi.size(); s > lo.size(); --s) {
        std::vector<Composition> next;
        for (const auto& c : layer)
            for (auto& [cell, d] : covers_down(c)) next.push_back(d);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
    }
    return std::binary_search(layer.begin(), layer.end(), lo);
}

std::vector<int> column_heights(const Composition& alpha) {
    const auto& a = alpha.parts();
    int maxp = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
    std::vector<int> h(maxp, 0);
    for (int p : a)
        for (int j = 0; j < p; ++j) ++h[j];
    return h;
}

bool dominance_leq(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance_leq: size mismatch");
    std::vector<int> ha = column_heights(a), hb = column_heights(b);
    const size_t m = std::max(ha.size(), hb.size());
    long long sa = 0, sb = 0;
    for (size_t j = 0; j < m; ++j) {
        sa += j < ha.size() ? ha[j] : 0;
        sb += j < hb.size() ? hb[j] : 0;
        if (sb > sa) return false;
    }
    return true;
}

bool dominance_lt(const Composition& a, const Composition& b) {
    return a != b && dominance_leq(a, b);
}

std::vector<Composition> compositions_of(int n) {
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first)
        for (const auto& rest : compositions_of(n - first)) {
            std::vector<int> p;
            p.reserve(rest.length() + 1);
            p.push_back(first);
            p.insert(p.end(), rest.parts().begin(), rest.parts().end());
            out.emplace_back(std::move(p));
        }
    return out;
}

SkewShape::SkewShape(Composition outer) : outer_(std::move(outer)) {}

SkewShape::SkewShape(Composition outer, Composition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!leq_c(inner_, outer_))
        throw std::invalid_argument("SkewShape: inner shape is not below outer in the composition poset");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = 1; j <= outer_.part(i); ++j)
            if (!in_inner({i, j})) out.push_back({i, j});
    return out;
}

bool SkewShape::in_outer(const Cell& c) const {
    return c.row >= 1 && c.row <= outer_.length() && c.col >= 1 && c.col <= outer_.part(c.row);
}

bool SkewShape::in_inner(const Cell& c) const {
    int r = c.row - row_offset();
    return r >= 1 && r <= inner_.length() && c.col >= 1 && c.col <= inner_.part(r);
}

std::string SkewShape::to_string() const {
    if (straight()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

std::optional<SkewShape> SkewShape::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    size_t slash = t.find('/');
    if (slash == std::string::npos) {
        auto outer = Composition::parse(t);
        if (!outer) return std::nullopt;
        return SkewShape(*outer);
    }
    auto outer = Composition::parse(t.substr(0, slash));
    auto inner = Composition::parse(t.substr(slash + 1));
    if (!outer || !inner) return std::nullopt;
    if (!leq_c(*inner, *outer)) return std::nullopt;
    return SkewShape(*outer, *inner);
}

}  // namespace cthecke
