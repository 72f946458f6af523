#include "qhgr/nilcox.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

namespace qhgr {

NilCoxElem nc_zero(i64 n) { return {n, {}}; }

NilCoxElem nc_one(i64 n) { return nc_term(AffinePermutation(n)); }

NilCoxElem nc_term(const AffinePermutation& w, i64 coeff) {
    NilCoxElem e{w.rank(), {}};
    if (coeff != 0) e.terms.emplace(w, coeff);
    return e;
}

NilCoxElem nc_add(const NilCoxElem& a, const NilCoxElem& b) {
    require(a.n == b.n, "rank mismatch");
    NilCoxElem out = a;
    for (const auto& [w, c] : b.terms) {
        i64& slot = out.terms[w];
        slot = checked_add(slot, c);
        if (slot == 0) out.terms.erase(w);
    }
    return out;
}

NilCoxElem nc_sub(const NilCoxElem& a, const NilCoxElem& b) { return nc_add(a, nc_scale(b, -1)); }

NilCoxElem nc_scale(const NilCoxElem& a, i64 c) {
    NilCoxElem out{a.n, {}};
    if (c == 0) return out;
    for (const auto& [w, coeff] : a.terms) out.terms.emplace(w, checked_mul(coeff, c));
    return out;
}

NilCoxElem nc_multiply(const NilCoxElem& a, const NilCoxElem& b) {
    require(a.n == b.n, "rank mismatch");
    NilCoxElem out{a.n, {}};
    std::vector<std::tuple<const AffinePermutation*, i64, i64>> rhs;  // (elem, length, coeff)
    rhs.reserve(b.terms.size());
    for (const auto& [w, c] : b.terms) rhs.emplace_back(&w, w.length(), c);
    for (const auto& [u, cu] : a.terms) {
        i64 lu = u.length();
        for (const auto& [vp, lv, cv] : rhs) {
            AffinePermutation w = u * *vp;
            if (w.length() != lu + lv) continue;
            i64& slot = out.terms[w];
            slot = checked_add(slot, checked_mul(cu, cv));
            if (slot == 0) out.terms.erase(w);
        }
    }
    return out;
}

std::string nc_to_string(const NilCoxElem& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : a.terms) {
        if (first && c < 0) os << "-";
        if (!first) os << (c > 0 ? "+" : "-");
        first = false;
        i64 mag = c > 0 ? c : -c;
        Word word = reduced_word(w);
        if (word.letters.empty()) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "A_{";
        for (i64 t : word.letters) os << t;
        os << "}";
    }
    return os.str();
}

HPolynomial hp_zero() { return {}; }

HPolynomial hp_one() { return {{{std::vector<i64>{}, 1}}}; }

HPolynomial hp_h(i64 r) {
    require(r >= 1, "index must be positive");
    return {{{std::vector<i64>{r}, 1}}};
}

HPolynomial hp_add(const HPolynomial& a, const HPolynomial& b) {
    HPolynomial out = a;
    for (const auto& [mono, c] : b.terms) {
        i64& slot = out.terms[mono];
        slot = checked_add(slot, c);
        if (slot == 0) out.terms.erase(mono);
    }
    return out;
}

HPolynomial hp_sub(const HPolynomial& a, const HPolynomial& b) {
    HPolynomial neg;
    for (const auto& [mono, c] : b.terms) neg.terms.emplace(mono, -c);
    return hp_add(a, neg);
}

HPolynomial hp_mul(const HPolynomial& a, const HPolynomial& b) {
    HPolynomial out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<i64> mono;
            mono.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono),
                       std::greater<i64>());
            i64& slot = out.terms[mono];
            slot = checked_add(slot, checked_mul(ca, cb));
            if (slot == 0) out.terms.erase(mono);
        }
    return out;
}

std::string hp_to_string(const HPolynomial& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : a.terms) {
        if (first && c < 0) os << "-";
        if (!first) os << (c > 0 ? " + " : " - ");
        first = false;
        i64 mag = c > 0 ? c : -c;
        std::vector<std::string> factors;
        if (mag != 1 || mono.empty()) factors.push_back(std::to_string(mag));
        for (size_t t = 0; t < mono.size();) {
            size_t u = t;
            while (u < mono.size() && mono[u] == mono[t]) ++u;
            std::string f = "h" + std::to_string(mono[t]);
            if (u - t > 1) f += "^" + std::to_string(u - t);
            factors.push_back(f);
            t = u;
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

namespace {

// Word of the cyclically decreasing/increasing element on a proper residue
// subset: one maximal cyclic run at a time (runs commute).
std::vector<i64> run_word(i64 n, u64 mask, bool decreasing) {
    std::vector<i64> word;
    auto in = [&](i64 t) { return (mask >> pos_mod(t, n)) & 1; };
    for (i64 start = 0; start < n; ++start) {
        if (!in(start) || in(start - 1)) continue;
        i64 len = 1;
        while (in(start + len)) ++len;
        for (i64 s = 0; s < len; ++s)
            word.push_back(pos_mod(decreasing ? start + len - 1 - s : start + s, n));
    }
    return word;
}

NilCoxElem cyclic_sum(i64 n, i64 r, bool decreasing) {
    require(n >= 2 && n < 63, "rank out of range");
    require(r >= 1 && r < n, "degree must satisfy 1 <= r <= n-1");
    NilCoxElem out{n, {}};
    for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
        if (std::popcount(mask) != (int)r) continue;
        auto w = from_word(n, run_word(n, mask, decreasing));
        require(w.length() == r, "run word is not reduced");
        out.terms.emplace(w, 1);
    }
    return out;
}

}  // namespace

NilCoxElem htilde(i64 n, i64 r) { return cyclic_sum(n, r, true); }

NilCoxElem etilde(i64 n, i64 r) { return cyclic_sum(n, r, false); }

namespace {

void horizontal_strips(const Partition& mu, i64 row, i64 budget, i64 max_part, Partition& cur,
                       std::vector<Partition>& out) {
    i64 rows = (i64)mu.size();
    if (row > rows) {
        if (budget == 0) {
            out.push_back(trim(cur));
            return;
        }
        // At most one fresh row below mu, taking the whole remaining budget.
        i64 cap = rows == 0 ? max_part : std::min(max_part, mu[rows - 1]);
        if (budget <= cap) {
            cur.push_back(budget);
            out.push_back(trim(cur));
            cur.pop_back();
        }
        return;
    }
    i64 lo = mu[row - 1];
    i64 hi = std::min(lo + budget, row == 1 ? max_part : std::min(max_part, mu[row - 2]));
    for (i64 v = lo; v <= hi; ++v) {
        cur[row - 1] = v;
        horizontal_strips(mu, row + 1, budget - (v - lo), max_part, cur, out);
    }
    cur[row - 1] = lo;
}

bool vertical_strip(const Partition& inner, const Partition& outer) {
    if (!contains(outer, inner)) return false;
    for (size_t i = 0; i < outer.size(); ++i)
        if (outer[i] - partition_part(inner, (i64)i + 1) > 1) return false;
    return true;
}

}  // namespace

std::vector<Partition> weak_pieri(i64 n, i64 r, const Partition& lam) {
    i64 k = n - 1;
    require(r >= 1 && r <= k, "degree must satisfy 1 <= r <= n-1");
    require_partition(lam);
    require(lam.empty() || lam[0] <= k, "parts must be at most n-1");
    std::vector<Partition> horiz;
    Partition cur = lam;
    horizontal_strips(lam, 1, r, k, cur, horiz);
    Partition lam_conj = kconjugate(n, lam);
    std::vector<Partition> out;
    for (auto& nu : horiz)
        if (vertical_strip(lam_conj, kconjugate(n, nu))) out.push_back(std::move(nu));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<i64, Partition>, HPolynomial> kschur_cache;
std::map<std::pair<i64, Partition>, NilCoxElem> ncs_cache;
std::map<std::pair<i64, std::vector<i64>>, NilCoxElem> mono_cache;

HPolynomial kschur_rec(i64 n, const Partition& lam, i64 depth, i64 cap) {
    require(depth <= cap, "expansion depth exceeded");
    if (lam.empty()) return hp_one();
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        if (auto it = kschur_cache.find({n, lam}); it != kschur_cache.end()) return it->second;
    }
    i64 r = lam[0];
    Partition tail(lam.begin() + 1, lam.end());
    HPolynomial out = hp_mul(hp_h(r), kschur_rec(n, tail, depth + 1, cap));
    for (const auto& nu : weak_pieri(n, r, tail)) {
        if (nu == lam) continue;
        require(nu[0] > r, "correction term does not increase the first part");
        out = hp_sub(out, kschur_rec(n, nu, depth + 1, cap));
    }
    std::lock_guard<std::mutex> lk(cache_mutex);
    kschur_cache.emplace(std::make_pair(n, lam), out);
    return out;
}

// h-monomials evaluated at the htilde generators, sharing prefixes.
NilCoxElem eval_monomial(i64 n, const std::vector<i64>& mono) {
    if (mono.empty()) return nc_one(n);
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        if (auto it = mono_cache.find({n, mono}); it != mono_cache.end()) return it->second;
    }
    std::vector<i64> prefix(mono.begin(), mono.end() - 1);
    NilCoxElem out = nc_multiply(eval_monomial(n, prefix), htilde(n, mono.back()));
    std::lock_guard<std::mutex> lk(cache_mutex);
    mono_cache.emplace(std::make_pair(n, mono), out);
    return out;
}

}  // namespace

HPolynomial kschur_h_poly(i64 n, const Partition& lam) {
    require(n >= 2, "rank must be at least 2");
    require_partition(lam);
    require(lam.empty() || lam[0] <= n - 1, "parts must be at most n-1");
    return kschur_rec(n, lam, 0, partition_size(lam) + n + 1);
}

NilCoxElem noncomm_kschur(i64 n, const Partition& lam) {
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        if (auto it = ncs_cache.find({n, lam}); it != ncs_cache.end()) return it->second;
    }
    HPolynomial poly = kschur_h_poly(n, lam);
    NilCoxElem out = nc_zero(n);
    for (const auto& [mono, c] : poly.terms) out = nc_add(out, nc_scale(eval_monomial(n, mono), c));
    std::lock_guard<std::mutex> lk(cache_mutex);
    ncs_cache.emplace(std::make_pair(n, lam), out);
    return out;
}

std::map<AffinePermutation, i64> j_expand(const NilCoxElem& elem) {
    std::map<AffinePermutation, i64> out;
    for (const auto& [w, c] : elem.terms)
        if (w.is_grassmannian()) out.emplace(w, c);
    NilCoxElem rebuilt = nc_zero(elem.n);
    for (const auto& [w, c] : out)
        rebuilt = nc_add(rebuilt, nc_scale(noncomm_kschur(elem.n, grassmannian_to_kbounded(w)), c));
    require(rebuilt == elem, "input not in the Fomin-Stanley span");
    return out;
}

void clear_nilcox_caches() {
    std::lock_guard<std::mutex> lk(cache_mutex);
    kschur_cache.clear();
    ncs_cache.clear();
    mono_cache.clear();
}

}  // namespace qhgr
