#include "z4/equivalence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace z4 {

Monomial identity_monomial(int n) {
    Monomial m;
    m.perm.resize(n);
    m.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) m.perm[i] = i;
    return m;
}

Monomial compose(const Monomial& outer, const Monomial& inner) {
    if (outer.n() != inner.n()) detail::throw_length_mismatch("compose");
    const int n = inner.n();
    Monomial m;
    m.perm.resize(n);
    m.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        m.perm[i] = outer.perm[inner.perm[i]];
        m.sign[i] = static_cast<std::int8_t>(inner.sign[i] * outer.sign[inner.perm[i]]);
    }
    return m;
}

Monomial inverse(const Monomial& m) {
    const int n = m.n();
    Monomial inv;
    inv.perm.resize(n);
    inv.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        inv.perm[m.perm[i]] = i;
        inv.sign[m.perm[i]] = m.sign[i];
    }
    return inv;
}

Word apply(const Monomial& m, Word w) {
    Word out = 0;
    for (int i = 0; i < m.n(); ++i) {
        Scalar v = word_get(w, i);
        if (m.sign[i] < 0) v = neg(v);
        out |= Word(v) << word_shift(m.perm[i]);
    }
    return out;
}

Z4Code apply_monomial(const Z4Code& c, const Monomial& m) {
    if (m.n() != c.n) detail::throw_length_mismatch("apply_monomial");
    Z4Code out;
    out.n = c.n;
    out.type = c.type;
    out.words.reserve(c.words.size());
    for (Word w : c.words) out.words.push_back(apply(m, w));
    std::sort(out.words.begin(), out.words.end());
    return out;
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    os << "perm=";
    for (int i = 0; i < m.n(); ++i) {
        if (i) os << ' ';
        os << m.perm[i] + 1;
    }
    os << "; signs=";
    for (int i = 0; i < m.n(); ++i) os << (m.sign[i] < 0 ? '-' : '+');
    return os.str();
}

bool Fingerprint::operator<(const Fingerprint& o) const {
    if (hamming_dist != o.hamming_dist) return hamming_dist < o.hamming_dist;
    if (lee_dist != o.lee_dist) return lee_dist < o.lee_dist;
    return column_profile < o.column_profile;
}

std::vector<std::array<std::int32_t, 3>> column_counts(const Z4Code& c) {
    std::vector<std::array<std::int32_t, 3>> cols(c.n, {0, 0, 0});
    for (Word w : c.words) {
        for (int i = 0; i < c.n; ++i) {
            const Scalar v = word_get(w, i);
            if (v == 0) ++cols[i][0];
            else if (v == 2) ++cols[i][2];
            else ++cols[i][1];
        }
    }
    return cols;
}

Fingerprint fingerprint(const Z4Code& c) {
    Fingerprint f;
    f.hamming_dist.assign(c.n + 1, 0);
    f.lee_dist.assign(2 * c.n + 1, 0);
    for (Word w : c.words) {
        ++f.hamming_dist[wt_h(w)];
        ++f.lee_dist[wt_l(w)];
    }
    f.column_profile = column_counts(c);
    std::sort(f.column_profile.begin(), f.column_profile.end());
    return f;
}

// ---------------------------------------------------------------------------
// Equivalence search.
//
// Assigns an image coordinate and sign to one source coordinate at a time.
// A partial assignment survives only if the multiset of codeword projections
// onto the assigned source coordinates (signs applied) equals the multiset of
// projections of the target code onto the chosen image coordinates. The
// multisets are tracked as matched block partitions of the two codeword
// lists, refined one coordinate at a time; a refinement step is O(|C|).
// Source coordinates are tried rarest-profile-first; image candidates must
// have an identical column profile.
// ---------------------------------------------------------------------------
namespace {

struct Searcher {
    const Z4Code& target; // C
    const Z4Code& source; // C2
    int n;
    std::size_t m;
    std::vector<std::array<std::int32_t, 3>> prof_t, prof_s;
    std::vector<int> order;        // source coordinates, rarest first
    std::vector<int> img;          // image of source coord, -1 if unset
    std::vector<std::int8_t> sgn;
    std::vector<bool> used;
    // block assignment per depth: words in the same block have equal
    // projections; block b of the target corresponds to block b of the source
    std::vector<std::vector<std::int32_t>> blocks_t, blocks_s;
    std::vector<std::int32_t> nblocks;
    std::vector<std::int32_t> count_t, count_s, renumber;

    Searcher(const Z4Code& c, const Z4Code& c2)
        : target(c), source(c2), n(c.n), m(c.words.size()) {
        prof_t = column_counts(target);
        prof_s = column_counts(source);
        img.assign(n, -1);
        sgn.assign(n, 1);
        used.assign(n, false);
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        // fewer compatible images first
        std::vector<int> compat(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (prof_s[i] == prof_t[j]) ++compat[i];
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return compat[a] < compat[b]; });
        blocks_t.assign(n + 1, std::vector<std::int32_t>(m, 0));
        blocks_s.assign(n + 1, std::vector<std::int32_t>(m, 0));
        nblocks.assign(n + 1, 1);
        count_t.resize(4 * m);
        count_s.resize(4 * m);
        renumber.resize(4 * m);
    }

    bool consistent(int depth, int src, int tgt, std::int8_t s) {
        const auto& bt = blocks_t[depth];
        const auto& bs = blocks_s[depth];
        auto& nt = blocks_t[depth + 1];
        auto& ns = blocks_s[depth + 1];
        const std::int32_t keys = 4 * nblocks[depth];
        std::fill(count_t.begin(), count_t.begin() + keys, 0);
        std::fill(count_s.begin(), count_s.begin() + keys, 0);
        for (std::size_t w = 0; w < m; ++w) {
            const Word sw = source.words[w];
            const Scalar v = s < 0 ? neg(word_get(sw, src)) : word_get(sw, src);
            ns[w] = 4 * bs[w] + v;
            nt[w] = 4 * bt[w] + word_get(target.words[w], tgt);
            ++count_s[ns[w]];
            ++count_t[nt[w]];
        }
        std::int32_t next = 0;
        for (std::int32_t k = 0; k < keys; ++k) {
            if (count_t[k] != count_s[k]) return false;
            if (count_t[k] > 0) renumber[k] = next++;
        }
        for (std::size_t w = 0; w < m; ++w) {
            nt[w] = renumber[nt[w]];
            ns[w] = renumber[ns[w]];
        }
        nblocks[depth + 1] = next;
        return true;
    }

    bool search(int depth, Monomial& out) {
        if (depth == n) {
            Monomial cand;
            cand.perm.assign(img.begin(), img.end());
            cand.sign.assign(sgn.begin(), sgn.end());
            if (apply_monomial(source, cand) == target) {
                out = std::move(cand);
                return true;
            }
            return false;
        }
        const int src = order[depth];
        for (int tgt = 0; tgt < n; ++tgt) {
            if (used[tgt] || !(prof_s[src] == prof_t[tgt])) continue;
            // a column without units is fixed by sign flips
            const bool try_minus = prof_s[src][1] > 0;
            for (int si = 0; si < (try_minus ? 2 : 1); ++si) {
                const std::int8_t s = si == 0 ? 1 : -1;
                if (!consistent(depth, src, tgt, s)) continue;
                img[src] = tgt;
                sgn[src] = s;
                used[tgt] = true;
                if (search(depth + 1, out)) return true;
                used[tgt] = false;
                img[src] = -1;
                sgn[src] = 1;
            }
        }
        return false;
    }
};

} // namespace

std::optional<Monomial> are_equivalent(const Z4Code& c, const Z4Code& c2) {
    if (c.n != c2.n) detail::throw_length_mismatch("are_equivalent");
    if (c.words.size() != c2.words.size()) return std::nullopt;
    if (c.words == c2.words) return identity_monomial(c.n);
    if (!(fingerprint(c) == fingerprint(c2))) return std::nullopt;
    Searcher s(c, c2);
    Monomial witness;
    if (s.search(0, witness)) return witness;
    return std::nullopt;
}

std::vector<EquivClass> partition_classes(const std::vector<Z4Code>& codes) {
    for (const Z4Code& c : codes)
        if (c.n != codes.front().n || !(c.type == codes.front().type))
            throw std::invalid_argument("partition_classes: mixed length or type");

    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < codes.size(); ++i)
        buckets[fingerprint(codes[i])].push_back(i);

    std::vector<EquivClass> classes;
    for (auto& [fp, members] : buckets) {
        std::vector<std::size_t> firsts; // first-seen member per class in bucket
        std::vector<std::vector<std::size_t>> groups;
        // process members in canonical code order so class membership never
        // depends on the caller's ordering
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            if (codes[a] == codes[b]) return a < b;
            return codes[a] < codes[b];
        });
        for (std::size_t idx : members) {
            bool placed = false;
            for (std::size_t g = 0; g < firsts.size(); ++g) {
                if (codes[idx] == codes[firsts[g]] ||
                    are_equivalent(codes[firsts[g]], codes[idx])) {
                    groups[g].push_back(idx);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                firsts.push_back(idx);
                groups.push_back({idx});
            }
        }
        for (std::size_t g = 0; g < groups.size(); ++g) {
            EquivClass cl;
            cl.representative = codes[groups[g].front()]; // canonical: smallest code
            std::sort(groups[g].begin(), groups[g].end());
            cl.members = std::move(groups[g]);
            classes.push_back(std::move(cl));
        }
    }
    std::sort(classes.begin(), classes.end(), [](const EquivClass& a, const EquivClass& b) {
        return a.representative < b.representative;
    });
    return classes;
}

} // namespace z4
