#include "z4/weights.hpp"

#include <algorithm>
#include <sstream>

namespace z4 {

namespace {

std::array<int, 3> symbol_counts(const Vec& v) {
    std::array<int, 3> c{0, 0, 0}; // units(1,3), twos, zeros unused here
    int units = 0, twos = 0;
    for (Scalar s : v) {
        if (is_unit(s)) ++units;
        else if (s == 2) ++twos;
    }
    c[0] = units;
    c[1] = twos;
    return c;
}

} // namespace

int wt_h(const Vec& v) {
    const auto c = symbol_counts(v);
    return c[0] + c[1];
}
int wt_l(const Vec& v) {
    const auto c = symbol_counts(v);
    return c[0] + 2 * c[1];
}
int wt_e(const Vec& v) {
    const auto c = symbol_counts(v);
    return c[0] + 4 * c[1];
}

WeightEnumerator enumerator(const Z4Code& c, WeightKind kind) {
    WeightEnumerator we;
    we.kind = kind;
    for (Word w : c.words) {
        std::array<int, 3> e{};
        switch (kind) {
            case WeightKind::hamming: {
                const int wt = wt_h(w);
                e = {c.n - wt, wt, 0};
                break;
            }
            case WeightKind::lee: {
                const int wt = wt_l(w);
                e = {2 * c.n - wt, wt, 0};
                break;
            }
            case WeightKind::symmetrized: {
                const int u = word_units(w);
                const int t = word_twos(w);
                e = {c.n - u - t, u, t};
                break;
            }
        }
        ++we.terms[e];
    }
    return we;
}

std::string to_string(const WeightEnumerator& we) {
    static const char* vars = "xyz";
    std::ostringstream os;
    bool first = true;
    for (auto it = we.terms.rbegin(); it != we.terms.rend(); ++it) {
        const auto& [e, count] = *it;
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (count != 1) {
            os << count;
            printed = true;
        }
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (printed) os << '*';
            os << vars[v];
            if (e[v] > 1) os << '^' << e[v];
            printed = true;
        }
        if (!printed) os << 1;
    }
    if (first) os << 0;
    return os.str();
}

WeightEnumerator hwe_from_swe(const WeightEnumerator& swe, int n) {
    WeightEnumerator we;
    we.kind = WeightKind::hamming;
    for (const auto& [e, count] : swe.terms) {
        const int wt = e[1] + e[2];
        we.terms[{n - wt, wt, 0}] += count;
    }
    return we;
}

WeightEnumerator lwe_from_swe(const WeightEnumerator& swe, int n) {
    WeightEnumerator we;
    we.kind = WeightKind::lee;
    for (const auto& [e, count] : swe.terms) {
        const int wt = e[1] + 2 * e[2];
        we.terms[{2 * n - wt, wt, 0}] += count;
    }
    return we;
}

WeightProfile weight_profile(const Z4Code& c) {
    WeightProfile p;
    for (Word w : c.words) {
        if (w == 0) continue;
        const int h = wt_h(w), l = wt_l(w), e = wt_e(w);
        if (!p.defined) {
            p = {true, h, l, e};
        } else {
            p.d_h = std::min(p.d_h, h);
            p.d_l = std::min(p.d_l, l);
            p.d_e = std::min(p.d_e, e);
        }
    }
    return p;
}

std::vector<Z4Code> optimal_codes(const std::vector<Z4Code>& family, Metric metric) {
    if (family.empty()) throw std::invalid_argument("optimal_codes: empty family");
    for (const Z4Code& c : family)
        if (!(c.type == family.front().type))
            throw std::invalid_argument("optimal_codes: mixed (n,k1,k2)");

    auto d = [&](const Z4Code& c) {
        const WeightProfile p = weight_profile(c);
        if (!p.defined) throw std::invalid_argument("optimal_codes: zero code");
        switch (metric) {
            case Metric::hamming: return p.d_h;
            case Metric::lee: return p.d_l;
            default: return p.d_e;
        }
    };

    int best = 0;
    for (const Z4Code& c : family) best = std::max(best, d(c));
    std::vector<Z4Code> out;
    for (const Z4Code& c : family)
        if (d(c) == best) out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace z4
