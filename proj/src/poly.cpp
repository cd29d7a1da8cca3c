#include "dispstruct/poly.hpp"

#include <algorithm>

namespace ds {

namespace {

bool g_strict_ntt = false;
size_t g_newton_threshold = 32;
constexpr size_t kSchoolbookCutoff = 32;

struct RootCache {
    u64 p = 0;
    std::vector<std::vector<Fp>> fwd, inv;  // level lg: w^j, j < 2^(lg-1)
};
thread_local RootCache t_roots;

const std::vector<Fp>& stage_roots(int lg, bool inverse) {
    RootCache& c = t_roots;
    if (c.p != prime()) {
        c.p = prime();
        c.fwd.clear();
        c.inv.clear();
    }
    if (static_cast<int>(c.fwd.size()) <= lg) {
        c.fwd.resize(lg + 1);
        c.inv.resize(lg + 1);
    }
    auto& tab = inverse ? c.inv[lg] : c.fwd[lg];
    if (tab.empty()) {
        Fp w = root_of_unity(lg);
        if (inverse) w = w.inv();
        size_t half = size_t{1} << (lg - 1);
        tab.resize(half);
        Fp x = Fp::raw(1);
        for (size_t j = 0; j < half; ++j) {
            tab[j] = x;
            x *= w;
        }
    }
    return tab;
}

Poly mul_ntt(const Poly& a, const Poly& b) {
    size_t len = a.size() + b.size() - 1;
    size_t n = ntt_size(len);
    std::vector<Fp> fa(a), fb(b);
    fa.resize(n);
    fb.resize(n);
    ntt(fa, false);
    ntt(fb, false);
    for (size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    ntt(fa, true);
    fa.resize(len);
    trim(fa);
    return fa;
}

Poly divrem_school(const Poly& a, const Poly& b, Poly* quo) {
    Poly r = a;
    size_t db = b.size() - 1;
    Fp li = b.back().inv();
    Poly q(r.size() - db);
    for (size_t i = r.size(); i-- > db;) {
        Fp c = r[i] * li;
        q[i - db] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r.resize(db);
    trim(r);
    trim(q);
    if (quo) *quo = std::move(q);
    return r;
}

// Newton division given an inverse of rev(b) valid to at least the needed precision.
std::pair<Poly, Poly> divrem_newton(const Poly& a, const Poly& b, const Poly& rinv) {
    size_t da = a.size() - 1, db = b.size() - 1;
    size_t k = da - db + 1;
    Poly ra = truncate(rev(a, static_cast<long>(da)), k);
    Poly qr = mul_trunc(ra, truncate(rinv, k), k);
    qr.resize(k);
    Poly q = rev(qr, static_cast<long>(k - 1));
    Poly r = sub(truncate(a, db), mul_trunc(q, b, db));
    return {q, r};
}

}  // namespace

void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly trimmed(Poly a) {
    trim(a);
    return a;
}

long deg(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return static_cast<long>(i);
    return -1;
}

Fp lead(const Poly& a) {
    long d = deg(a);
    return d < 0 ? Fp() : a[d];
}

Fp eval(const Poly& a, Fp x) {
    Fp r;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly scale(const Poly& a, Fp c) {
    if (c.is_zero()) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

void add_into(Poly& acc, const Poly& b, size_t shift) {
    if (b.empty()) return;
    if (acc.size() < b.size() + shift) acc.resize(b.size() + shift);
    for (size_t i = 0; i < b.size(); ++i) acc[i + shift] += b[i];
}

Poly truncate(const Poly& a, size_t k) {
    Poly r(a.begin(), a.begin() + std::min(k, a.size()));
    trim(r);
    return r;
}

Poly shift_down(const Poly& a, size_t k) {
    if (a.size() <= k) return {};
    return Poly(a.begin() + k, a.end());
}

Poly shift_up(const Poly& a, size_t k) {
    if (a.empty()) return {};
    Poly r(k);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

Vec to_vec(const Poly& a, size_t n) {
    if (deg(a) >= static_cast<long>(n)) throw DimensionMismatch("polynomial does not fit in " + std::to_string(n) + " coefficients");
    Vec v(n);
    for (size_t i = 0; i < std::min(n, a.size()); ++i) v[i] = a[i];
    return v;
}

size_t ntt_size(size_t len) {
    size_t n = 1;
    while (n < len) n <<= 1;
    return n;
}

void set_strict_ntt(bool strict) { g_strict_ntt = strict; }
void set_newton_threshold(size_t t) { g_newton_threshold = t; }

void ntt(std::vector<Fp>& a, bool inverse) {
    size_t n = a.size();
    if (n <= 1) return;
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    int lg = 1;
    for (size_t len = 2; len <= n; len <<= 1, ++lg) {
        const auto& w = stage_roots(lg, inverse);
        size_t half = len >> 1;
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < half; ++j) {
                Fp u = a[i + j], v = a[i + j + half] * w[j];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
    if (inverse) {
        Fp ni = Fp(n).inv();
        for (auto& x : a) x *= ni;
    }
}

Poly mul_schoolbook(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) return mul_schoolbook(a, b);
    size_t n = ntt_size(a.size() + b.size() - 1);
    if (n > (size_t{1} << modulus().two_adicity)) {
        if (g_strict_ntt) throw DegreeOverflow();
        return mul_schoolbook(a, b);
    }
    return mul_ntt(a, b);
}

Poly mul_trunc(const Poly& a, const Poly& b, size_t k) {
    Poly r = mul(truncate(a, k), truncate(b, k));
    if (r.size() > k) r.resize(k);
    trim(r);
    return r;
}

Vec middle_product(const Poly& a, const Vec& b, size_t n) {
    Vec out(n);
    if (a.empty() || n == 0) return out;
    size_t la = a.size();
    Poly ra(a.rbegin(), a.rend());
    Poly bb(b.begin(), b.begin() + std::min(b.size(), n + la - 1));
    Poly c = mul(ra, bb);
    for (size_t i = 0; i < n; ++i)
        if (la - 1 + i < c.size()) out[i] = c[la - 1 + i];
    return out;
}

Poly rev(const Poly& a, long d) {
    if (deg(a) > d) throw BoundTooSmall();
    if (d < 0) return {};
    Poly r(static_cast<size_t>(d) + 1);
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(d); ++i) r[d - i] = a[i];
    trim(r);
    return r;
}

Poly series_inv(const Poly& a, size_t k) {
    if (a.empty() || a[0].is_zero()) throw NonUnitConstantTerm();
    if (k == 0) return {};
    Poly g{a[0].inv()};
    size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        Poly e = mul_trunc(truncate(a, prec), g, prec);
        // g <- g (2 - a g)
        Poly two_minus(prec);
        for (size_t i = 0; i < e.size(); ++i) two_minus[i] = -e[i];
        two_minus[0] += Fp(2);
        trim(two_minus);
        g = mul_trunc(g, two_minus, prec);
    }
    return g;
}

std::pair<Poly, Poly> divrem(const Poly& a0, const Poly& b0) {
    Poly a = trimmed(a0), b = trimmed(b0);
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {{}, a};
    size_t db = b.size() - 1, dq = a.size() - b.size();
    if (db <= g_newton_threshold || dq <= g_newton_threshold) {
        Poly q;
        Poly r = divrem_school(a, b, &q);
        return {q, r};
    }
    Poly rinv = series_inv(rev(b, static_cast<long>(db)), dq + 1);
    return divrem_newton(a, b, rinv);
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return rem(mul(a, b), m); }

Xgcd xgcd(const Poly& a, const Poly& b) {
    Poly r0 = trimmed(a), r1 = trimmed(b);
    if (r0.empty() && r1.empty()) throw std::invalid_argument("xgcd of two zero polynomials");
    Poly s0{Fp(1)}, s1, t0, t1{Fp(1)};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Fp li = lead(r0).inv();
    return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

Poly inv_mod(const Poly& a, const Poly& m) {
    Poly ar = rem(a, m);
    if (ar.empty()) throw ZeroInverse();
    Xgcd x = xgcd(ar, m);
    if (x.g.size() != 1) throw ZeroInverse();
    return rem(x.s, m);
}

Divisor::Divisor(Poly b) : b_(trimmed(std::move(b))) {
    if (b_.empty()) throw DivisionByZero();
    size_t db = b_.size() - 1;
    if (db > 0) rinv_ = series_inv(rev(b_, static_cast<long>(db)), db);
}

std::pair<Poly, Poly> Divisor::divrem(const Poly& a0) const {
    Poly a = trimmed(a0);
    if (a.size() < b_.size()) return {{}, a};
    size_t db = b_.size() - 1, dq = a.size() - b_.size();
    if (db <= g_newton_threshold || dq <= g_newton_threshold) {
        Poly q;
        Poly r = divrem_school(a, b_, &q);
        return {q, r};
    }
    if (dq + 1 <= db) return divrem_newton(a, b_, rinv_);  // cached inverse has precision db
    return divrem_newton(a, b_, series_inv(rev(b_, static_cast<long>(db)), dq + 1));
}

Poly Divisor::rem(const Poly& a) const {
    if (deg(a) < static_cast<long>(degree())) return trimmed(a);
    return divrem(a).second;
}

Vec y_apply(const Poly& P, const Vec& v, bool inverse) {
    long dm = deg(P);
    if (dm < 0 || v.size() != static_cast<size_t>(dm)) throw DimensionMismatch("symmetrizer size");
    size_t m = static_cast<size_t>(dm);
    Poly rp = rev(P, dm);
    if (!inverse) {
        Vec w = to_vec(mul_trunc(rp, trimmed(v), m), m);
        std::reverse(w.begin(), w.end());
        return w;
    }
    Vec jv(v.rbegin(), v.rend());
    return to_vec(mul_trunc(series_inv(rp, m), trimmed(jv), m), m);
}

Vec geom_eval(Fp u, Fp q, const Poly& a0, size_t n) {
    if (q.is_zero()) throw DegeneratePoints();
    Vec out(n);
    Poly a = trimmed(a0);
    if (n == 0 || a.empty()) return out;
    size_t la = a.size();
    size_t len = n + la - 1;
    // h_k = q^{k(k-1)/2}
    std::vector<Fp> h(len), hi(len);
    Fp qi = q.inv();
    Fp step = Fp::raw(1), stepi = Fp::raw(1);
    h[0] = hi[0] = Fp::raw(1);
    for (size_t k = 1; k < len; ++k) {
        h[k] = h[k - 1] * step;
        hi[k] = hi[k - 1] * stepi;
        step *= q;
        stepi *= qi;
    }
    Poly f(la);
    Fp up = Fp::raw(1);
    for (size_t j = 0; j < la; ++j) {
        f[j] = a[j] * up * hi[j];
        up *= u;
    }
    Vec mp = middle_product(f, h, n);
    for (size_t i = 0; i < n; ++i) out[i] = mp[i] * hi[i];
    return out;
}

namespace {
Poly product_of_linears(const std::vector<Fp>& roots, size_t lo, size_t hi) {
    if (hi - lo == 1) return {-roots[lo], Fp(1)};
    size_t mid = (lo + hi) / 2;
    return mul(product_of_linears(roots, lo, mid), product_of_linears(roots, mid, hi));
}
}  // namespace

Poly geom_interp(Fp u, Fp q, const Vec& values) {
    size_t n = values.size();
    if (n == 0) return {};
    if (u.is_zero() || q.is_zero()) throw DegeneratePoints();
    Fp qk = q;
    for (size_t k = 1; k < n; ++k, qk *= q)
        if (qk == Fp(1)) throw DegeneratePoints();
    std::vector<Fp> pts(n);
    Fp x = Fp::raw(1);
    for (size_t i = 0; i < n; ++i, x *= q) pts[i] = x;
    Poly P = product_of_linears(pts, 0, n);
    Poly dP(n);
    for (size_t i = 1; i <= n; ++i) dP[i - 1] = P[i] * Fp(i);
    trim(dP);
    Vec dv = geom_eval(Fp(1), q, dP, n);
    Poly c(n);
    for (size_t i = 0; i < n; ++i) c[i] = values[i] * dv[i].inv();
    trim(c);
    Vec t = geom_eval(Fp(1), q, c, n);
    Poly T = trimmed(Poly(t.begin(), t.end()));
    Poly num = mul_trunc(rev(P, static_cast<long>(n)), T, n);
    num.resize(n);
    Poly scaled = rev(trimmed(num), static_cast<long>(n) - 1);
    Fp ui = u.inv(), up = Fp::raw(1);
    for (auto& co : scaled) {
        co *= up;
        up *= ui;
    }
    trim(scaled);
    return scaled;
}

int PolyFamily::build_node(size_t lo, size_t hi) {
    int idx = static_cast<int>(nodes_.size());
    Node fresh;
    fresh.lo = lo;
    fresh.hi = hi;
    nodes_.push_back(std::move(fresh));
    if (hi - lo == 1) {
        nodes_[idx].poly = polys_[lo];
    } else {
        size_t total = offsets_[hi - 1] + degree(hi - 1) - offsets_[lo];
        size_t best = lo + 1;
        size_t best_gap = static_cast<size_t>(-1);
        for (size_t s = lo + 1; s < hi; ++s) {
            size_t left = offsets_[s] - offsets_[lo];
            size_t gap = left * 2 > total ? left * 2 - total : total - left * 2;
            if (gap < best_gap) {
                best_gap = gap;
                best = s;
            }
        }
        int l = build_node(lo, best);
        int r = build_node(best, hi);
        nodes_[idx].left = l;
        nodes_[idx].right = r;
        nodes_[idx].poly = mul(nodes_[l].poly, nodes_[r].poly);
    }
    Node& nd = nodes_[idx];
    nd.rev_poly = rev(nd.poly, deg(nd.poly));
    nd.div = Divisor(nd.poly);
    return idx;
}

PolyFamily PolyFamily::build(std::vector<Poly> polys, Flavor hint) {
    PolyFamily fam;
    if (polys.empty()) throw std::invalid_argument("empty polynomial family");
    for (size_t i = 0; i < polys.size(); ++i) {
        trim(polys[i]);
        if (polys[i].size() < 2 || !(polys[i].back() == Fp(1))) throw NotMonic(i);
    }
    fam.polys_ = std::move(polys);
    size_t d = fam.polys_.size();
    fam.offsets_.resize(d);
    for (size_t i = 0; i < d; ++i) {
        fam.offsets_[i] = fam.m_;
        fam.m_ += fam.degree(i);
    }
    fam.nodes_.reserve(2 * d);
    fam.build_node(0, d);
    fam.member_div_.resize(d);
    for (const auto& nd : fam.nodes_)
        if (nd.hi - nd.lo == 1) fam.member_div_[nd.lo] = nd.div;

    if (d == 1) {
        fam.E_ = {Poly{Fp(1)}};
        fam.F_ = {Poly{Fp(1)}};
    } else {
        std::vector<Poly> ones(d, Poly{Fp(1)});
        Poly pstar = comb_family(fam, ones);
        fam.E_.resize(d);
        fam.F_.resize(d);
        for (size_t i = 0; i < d; ++i) {
            fam.E_[i] = fam.member_div_[i].rem(pstar);
            Poly ei = fam.E_[i];
            bool ok = !ei.empty();
            Xgcd x;
            if (ok) {
                x = xgcd(ei, fam.polys_[i]);
                ok = x.g.size() == 1;
            }
            if (!ok) {
                for (size_t j = 0; j < d; ++j)
                    if (j != i && gcd(fam.polys_[i], fam.polys_[j]).size() > 1) throw NotCoprime(std::min(i, j), std::max(i, j));
                throw NotCoprime(i, i);
            }
            fam.F_[i] = fam.member_div_[i].rem(x.s);
        }
    }

    if (hint == Flavor::SinglePower && d == 1) {
        const Poly& P = fam.polys_[0];
        bool ok = true;
        for (size_t i = 1; i + 1 < P.size(); ++i) ok = ok && P[i].is_zero();
        if (ok) {
            fam.flavor_ = Flavor::SinglePower;
            fam.phi_ = -P[0];
        }
    } else if (hint == Flavor::Geometric) {
        bool ok = true;
        for (size_t i = 0; i < d; ++i) ok = ok && fam.degree(i) == 1;
        if (ok) {
            Fp u = -fam.polys_[0][0];
            Fp q = Fp(1);
            if (d >= 2) ok = !u.is_zero();
            if (ok && d >= 2) q = -fam.polys_[1][0] / u;
            Fp r = u;
            for (size_t i = 0; ok && i < d; ++i, r *= q) ok = (-fam.polys_[i][0]) == r;
            if (ok && !u.is_zero()) {
                fam.flavor_ = Flavor::Geometric;
                fam.gu_ = u;
                fam.gq_ = q;
            }
        }
    }
    return fam;
}

std::vector<Poly> PolyFamily::split(const Vec& v) const {
    if (v.size() != m_) throw DimensionMismatch("stacked vector length");
    std::vector<Poly> parts(size());
    for (size_t i = 0; i < size(); ++i) parts[i] = trimmed(Poly(v.begin() + offsets_[i], v.begin() + offsets_[i] + degree(i)));
    return parts;
}

Vec PolyFamily::stack(const std::vector<Poly>& parts) const {
    if (parts.size() != size()) throw DimensionMismatch("number of parts");
    Vec v(m_);
    for (size_t i = 0; i < size(); ++i) {
        if (deg(parts[i]) >= static_cast<long>(degree(i))) throw DimensionMismatch("part degree");
        for (size_t j = 0; j < parts[i].size() && j < degree(i); ++j) v[offsets_[i] + j] = parts[i][j];
    }
    return v;
}

namespace {

void red_rec(const PolyFamily& fam, int idx, const Poly& a, std::vector<Poly>& out) {
    const auto& nd = fam.tree()[idx];
    Poly r = nd.div.rem(a);
    if (nd.left < 0) {
        out[nd.lo] = std::move(r);
        return;
    }
    red_rec(fam, nd.left, r, out);
    red_rec(fam, nd.right, r, out);
}

Poly comb_rec(const PolyFamily& fam, int idx, const std::vector<Poly>& parts, bool reversed) {
    const auto& nd = fam.tree()[idx];
    if (nd.left < 0) return parts[nd.lo];
    const auto& L = fam.tree()[nd.left];
    const auto& R = fam.tree()[nd.right];
    Poly a = comb_rec(fam, nd.left, parts, reversed);
    Poly b = comb_rec(fam, nd.right, parts, reversed);
    return add(mul(a, reversed ? R.rev_poly : R.poly), mul(b, reversed ? L.rev_poly : L.poly));
}

void comb_transposed_rec(const PolyFamily& fam, int idx, const Vec& w, std::vector<Vec>& out) {
    const auto& nd = fam.tree()[idx];
    if (nd.left < 0) {
        out[nd.lo] = w;
        return;
    }
    const auto& L = fam.tree()[nd.left];
    const auto& R = fam.tree()[nd.right];
    size_t dl = L.poly.size() - 1, dr = R.poly.size() - 1;
    comb_transposed_rec(fam, nd.left, middle_product(R.poly, w, dl), out);
    comb_transposed_rec(fam, nd.right, middle_product(L.poly, w, dr), out);
}

void check_parts(const PolyFamily& fam, const std::vector<Poly>& parts) {
    if (parts.size() != fam.size()) throw DimensionMismatch("number of parts");
    for (size_t i = 0; i < parts.size(); ++i)
        if (deg(parts[i]) >= static_cast<long>(fam.degree(i))) throw DimensionMismatch("part " + std::to_string(i) + " degree");
}

}  // namespace

std::vector<Poly> red_family(const PolyFamily& fam, const Poly& a) {
    std::vector<Poly> out(fam.size());
    Poly at = trimmed(a);
    if (at.empty()) return out;
    if (fam.flavor() == Flavor::Geometric && fam.size() > 1) {
        Poly r = fam.tree()[0].div.rem(at);
        Vec vals = geom_eval(fam.geom_u(), fam.geom_q(), r, fam.size());
        for (size_t i = 0; i < fam.size(); ++i) out[i] = trimmed(Poly{vals[i]});
        return out;
    }
    red_rec(fam, 0, at, out);
    return out;
}

Poly comb_family(const PolyFamily& fam, const std::vector<Poly>& parts) {
    check_parts(fam, parts);
    return comb_rec(fam, 0, parts, false);
}

std::vector<Poly> comb_family_inv(const PolyFamily& fam, const Poly& a) {
    if (deg(a) >= static_cast<long>(fam.total_degree())) throw DimensionMismatch("comb inverse input degree");
    std::vector<Poly> r = red_family(fam, a);
    if (fam.size() == 1) return r;
    for (size_t i = 0; i < r.size(); ++i) r[i] = fam.divisor(i).rem(mul(r[i], fam.F(i)));
    return r;
}

Poly crt_family(const PolyFamily& fam, const std::vector<Poly>& residues) {
    check_parts(fam, residues);
    if (fam.size() == 1) return residues[0];
    if (fam.flavor() == Flavor::Geometric) {
        Vec vals(fam.size());
        for (size_t i = 0; i < vals.size(); ++i) vals[i] = residues[i].empty() ? Fp() : residues[i][0];
        return geom_interp(fam.geom_u(), fam.geom_q(), vals);
    }
    std::vector<Poly> scaled(fam.size());
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = fam.divisor(i).rem(mul(residues[i], fam.F(i)));
    return comb_rec(fam, 0, scaled, false);
}

Vec modmul_transposed_pp(const Poly& F, const Poly& P, const Vec& w) {
    long dk = deg(P);
    if (dk < 0 || w.size() != static_cast<size_t>(dk)) throw DimensionMismatch("transposed modular product");
    size_t k = static_cast<size_t>(dk);
    Poly rp = rev(P, dk);
    Poly N = mul_trunc(trimmed(w), rp, k);
    Poly S = mul_trunc(N, series_inv(rp, 2 * k), 2 * k);
    S.resize(2 * k);
    return middle_product(rem(F, P), S, k);
}

Vec red_transposed(const PolyFamily& fam, const Vec& u, bool inverse) {
    size_t m = fam.total_degree();
    if (u.size() != m) throw DimensionMismatch("transposed reduction input");
    if (!inverse) {
        std::vector<Poly> nums(fam.size());
        for (size_t i = 0; i < fam.size(); ++i) {
            Poly ui = trimmed(Poly(u.begin() + fam.offset(i), u.begin() + fam.offset(i) + fam.degree(i)));
            nums[i] = mul_trunc(ui, rev(fam.member(i), static_cast<long>(fam.degree(i))), fam.degree(i));
        }
        Poly total = comb_rec(fam, 0, nums, true);
        Poly rinv = series_inv(fam.tree()[0].rev_poly, m);
        return to_vec(mul_trunc(total, rinv, m), m);
    }
    std::vector<Vec> parts(fam.size());
    comb_transposed_rec(fam, 0, u, parts);
    Vec out(m);
    for (size_t i = 0; i < fam.size(); ++i) {
        Vec pi = fam.size() == 1 ? parts[i] : modmul_transposed_pp(fam.F(i), fam.member(i), parts[i]);
        std::copy(pi.begin(), pi.end(), out.begin() + fam.offset(i));
    }
    return out;
}

}  // namespace ds
