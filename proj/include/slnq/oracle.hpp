#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <unordered_set>
#include <vector>

#include "slnq/classcount.hpp"

namespace slnq {

// F_q in discrete-log form: element ids are 0 for zero and 1+k for g^k,
// where g is the root of the lexicographically least primitive polynomial
// of degree f over F_p. Addition goes through the Zech table
// zech[m] = log(1 + g^m).
class ZechField {
public:
    explicit ZechField(std::uint64_t q) : q_(PrimePowerQ::of(q)) {
        if (q > TowerContext::kMaxFieldSize)
            throw capacity_error("ZechField: q exceeds 2^20 cap");
        for (std::uint64_t v = 0; v < q; ++v)
            if (try_build(v)) { poly_code_ = v; return; }
        throw std::logic_error("ZechField: no primitive polynomial found");
    }

    std::uint64_t q() const { return q_.q; }
    std::uint64_t p() const { return q_.p; }
    unsigned f() const { return q_.f; }
    std::uint64_t unit_order() const { return q_.q - 1; }
    std::uint64_t poly_code() const { return poly_code_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }
    std::uint32_t gen() const { return from_log(1 % unit_order()); }

    std::uint32_t from_log(std::uint64_t k) const {
        return static_cast<std::uint32_t>(1 + k % unit_order());
    }
    std::uint64_t log(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("ZechField: log of zero");
        return a - 1;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return from_log(static_cast<std::uint64_t>(a - 1) + (b - 1));
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("ZechField: inverse of zero");
        return from_log(unit_order() - (a - 1) % unit_order());
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (a == 0 || q_.p == 2) return a;
        return from_log(static_cast<std::uint64_t>(a - 1) + minus_one_log_);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint64_t i = a - 1, j = b - 1;
        if (i > j) std::swap(i, j);
        std::uint64_t m = j - i;
        if (m == minus_one_log_) return 0;
        return from_log(i + zech_[m]);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

private:
    // Try poly x^f + sum a_i x^i encoded by v (a_i = base-p digits of v):
    // primitive iff the powers of x run through all q-1 nonzero codes.
    bool try_build(std::uint64_t v) {
        std::uint64_t q = q_.q, p = q_.p;
        unsigned f = q_.f;
        std::vector<std::uint32_t> coeff(f);
        for (unsigned i = 0; i < f; ++i) { coeff[i] = v % p; v /= p; }

        std::vector<std::uint64_t> exp_code(q - 1);
        std::vector<char> seen(q, 0);
        std::uint64_t code = 1; // the constant polynomial 1
        for (std::uint64_t k = 0; k + 1 < q; ++k) {
            if (code == 0 || seen[code]) return false;
            seen[code] = 1;
            exp_code[k] = code;
            code = mul_by_x(code, coeff);
        }
        if (code != 1) return false;

        std::vector<std::uint64_t> log_code(q, 0);
        for (std::uint64_t k = 0; k + 1 < q; ++k) log_code[exp_code[k]] = k;

        zech_.assign(q - 1, 0);
        minus_one_log_ = q - 1; // sentinel until found
        for (std::uint64_t m = 0; m + 1 < q; ++m) {
            std::uint64_t sum = code_add(1, exp_code[m]);
            if (sum == 0) minus_one_log_ = m;
            else zech_[m] = log_code[sum];
        }
        return true;
    }

    std::uint64_t mul_by_x(std::uint64_t code, const std::vector<std::uint32_t>& coeff) const {
        std::uint64_t p = q_.p;
        unsigned f = q_.f;
        std::vector<std::uint32_t> digit(f);
        for (unsigned i = 0; i < f; ++i) { digit[i] = code % p; code /= p; }
        std::uint32_t carry = digit[f - 1];
        for (unsigned i = f; i-- > 1;) digit[i] = digit[i - 1];
        digit[0] = 0;
        if (carry != 0)
            for (unsigned i = 0; i < f; ++i)
                digit[i] = static_cast<std::uint32_t>((digit[i] + (p - coeff[i]) * carry) % p);
        std::uint64_t out = 0;
        for (unsigned i = f; i-- > 0;) out = out * p + digit[i];
        return out;
    }

    std::uint64_t code_add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t p = q_.p;
        std::uint64_t out = 0, mult = 1;
        for (unsigned i = 0; i < q_.f; ++i) {
            out += mult * ((a % p + b % p) % p);
            a /= p;
            b /= p;
            mult *= p;
        }
        return out;
    }

    PrimePowerQ q_;
    std::uint64_t poly_code_ = 0;
    std::uint64_t minus_one_log_ = 0;
    std::vector<std::uint64_t> zech_;
};

// Per-process field registry; representations stay stable for a given q.
inline const ZechField& zech_field(std::uint64_t q) {
    static std::map<std::uint64_t, std::unique_ptr<ZechField>> cache;
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<ZechField>(q)).first;
    return *it->second;
}

constexpr int kMaxMatDim = 4;

// Square matrix over a ZechField, entries stored as element ids.
struct Mat {
    int n = 0;
    std::array<std::uint32_t, kMaxMatDim * kMaxMatDim> a{};

    std::uint32_t& at(int r, int c) { return a[r * n + c]; }
    std::uint32_t at(int r, int c) const { return a[r * n + c]; }

    static Mat identity(int n, const ZechField& F) {
        Mat m;
        m.n = n;
        for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
        return m;
    }

    friend bool operator==(const Mat&, const Mat&) = default;
};

inline std::uint64_t pack_key(const Mat& m, std::uint64_t q) {
    std::uint64_t key = 0;
    for (int i = m.n * m.n; i-- > 0;) key = key * q + m.a[i];
    return key;
}

inline Mat unpack_key(std::uint64_t key, int n, std::uint64_t q) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n * n; ++i) { m.a[i] = key % q; key /= q; }
    return m;
}

inline Mat mat_mul(const Mat& x, const Mat& y, const ZechField& F) {
    Mat out;
    out.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            std::uint32_t acc = 0;
            for (int k = 0; k < x.n; ++k) acc = F.add(acc, F.mul(x.at(i, k), y.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

inline Mat mat_pow(Mat base, std::uint64_t e, const ZechField& F) {
    Mat out = Mat::identity(base.n, F);
    while (e > 0) {
        if (e & 1) out = mat_mul(out, base, F);
        base = mat_mul(base, base, F);
        e >>= 1;
    }
    return out;
}

inline std::uint32_t mat_det(Mat m, const ZechField& F) {
    std::uint32_t det = F.one();
    for (int c = 0; c < m.n; ++c) {
        int pivot = -1;
        for (int r = c; r < m.n; ++r)
            if (m.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(c, c));
        std::uint32_t inv = F.inv(m.at(c, c));
        for (int r = c + 1; r < m.n; ++r) {
            if (m.at(r, c) == 0) continue;
            std::uint32_t factor = F.mul(m.at(r, c), inv);
            for (int j = c; j < m.n; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(c, j)));
        }
    }
    return det;
}

inline Mat mat_inverse(const Mat& m, const ZechField& F) {
    Mat aug = m;
    Mat inv = Mat::identity(m.n, F);
    for (int c = 0; c < m.n; ++c) {
        int pivot = -1;
        for (int r = c; r < m.n; ++r)
            if (aug.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("mat_inverse: singular matrix");
        for (int j = 0; j < m.n; ++j) {
            std::swap(aug.at(pivot, j), aug.at(c, j));
            std::swap(inv.at(pivot, j), inv.at(c, j));
        }
        std::uint32_t s = F.inv(aug.at(c, c));
        for (int j = 0; j < m.n; ++j) {
            aug.at(c, j) = F.mul(aug.at(c, j), s);
            inv.at(c, j) = F.mul(inv.at(c, j), s);
        }
        for (int r = 0; r < m.n; ++r) {
            if (r == c || aug.at(r, c) == 0) continue;
            std::uint32_t factor = aug.at(r, c);
            for (int j = 0; j < m.n; ++j) {
                aug.at(r, j) = F.sub(aug.at(r, j), F.mul(factor, aug.at(c, j)));
                inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(c, j)));
            }
        }
    }
    return inv;
}

// G in {GL_n(q), SL_n(q), R_n(q)}; R is cut out by det landing in the
// index-t subgroup of F_q^x for t = (q-1)_ell, so that R/SL is the
// ell'-Hall part of GL/SL.
struct GroupSpec {
    GroupKind kind = GroupKind::GL;
    int n = 1;
    std::uint64_t q = 2;
    std::uint64_t t = 1; // det image is <g^t>

    static GroupSpec gl(int n, std::uint64_t q) { return {GroupKind::GL, n, q, 1}; }
    static GroupSpec sl(int n, std::uint64_t q) { return {GroupKind::SL, n, q, q - 1}; }
    static GroupSpec r(int n, std::uint64_t q, const EllPrime& ell) {
        return {GroupKind::R, n, q, ell_part(q - 1, ell)};
    }

    friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

inline std::uint64_t group_order(const GroupSpec& spec) {
    std::uint64_t gl = gl_order(spec.n, spec.q);
    return gl / (spec.q - 1) * ((spec.q - 1) / spec.t);
}

inline bool det_in_group(std::uint32_t det, const GroupSpec& spec, const ZechField& F) {
    return F.log(det) % spec.t == 0;
}

constexpr std::uint64_t kMaxStoredGroup = 1000000;
constexpr std::uint64_t kMaxKeySpace = std::uint64_t(1) << 24;

inline void check_key_space(int n, std::uint64_t q) {
    if (n > kMaxMatDim) throw capacity_error("oracle: dimension capped at 4");
    std::uint64_t space = 1;
    for (int i = 0; i < n * n; ++i) {
        space *= q;
        if (space > kMaxKeySpace) throw capacity_error("oracle: q^(n^2) exceeds key-space cap");
    }
}

// Stream every invertible n x n matrix exactly once, row by row, keeping
// the chosen rows in echelon form to test independence.
template <class Visit>
void stream_invertible(int n, const ZechField& F, Visit&& visit) {
    check_key_space(n, F.q());
    std::uint64_t q = F.q();
    std::uint64_t qn = ipow(q, static_cast<unsigned>(n));

    Mat m;
    m.n = n;
    std::vector<std::array<std::uint32_t, kMaxMatDim>> basis;
    std::vector<int> pivots;

    auto reduce = [&](std::array<std::uint32_t, kMaxMatDim>& row) -> int {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            int c = pivots[b];
            if (row[c] == 0) continue;
            std::uint32_t factor = F.mul(row[c], F.inv(basis[b][c]));
            for (int j = 0; j < n; ++j)
                row[j] = F.sub(row[j], F.mul(factor, basis[b][j]));
        }
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) return j;
        return -1;
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) { visit(m); return; }
        for (std::uint64_t v = 1; v < qn; ++v) {
            std::uint64_t code = v;
            std::array<std::uint32_t, kMaxMatDim> row{};
            for (int j = 0; j < n; ++j) { row[j] = code % q; code /= q; }
            for (int j = 0; j < n; ++j) m.at(depth, j) = row[j];
            int pivot = reduce(row);
            if (pivot < 0) continue;
            basis.push_back(row);
            pivots.push_back(pivot);
            self(self, depth + 1);
            basis.pop_back();
            pivots.pop_back();
        }
    };
    rec(rec, 0);
}

// Stored element enumeration (sorted packed keys); |G| <= 10^6.
inline std::vector<std::uint64_t> enumerate_group(const GroupSpec& spec) {
    if (group_order(spec) > kMaxStoredGroup)
        throw capacity_error("oracle: |G| exceeds the 10^6 stored-enumeration cap");
    const ZechField& F = zech_field(spec.q);
    std::vector<std::uint64_t> keys;
    keys.reserve(group_order(spec));
    stream_invertible(spec.n, F, [&](const Mat& m) {
        if (det_in_group(mat_det(m, F), spec, F)) keys.push_back(pack_key(m, spec.q));
    });
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Transvections generate SL; a diagonal torus generator extends them to
// GL or to R (det image <g^t>).
inline std::vector<Mat> group_generators(const GroupSpec& spec) {
    const ZechField& F = zech_field(spec.q);
    std::vector<Mat> gens;
    for (int r = 0; r < spec.n; ++r)
        for (int c = 0; c < spec.n; ++c) {
            if (r == c) continue;
            for (unsigned j = 0; j < F.f(); ++j) {
                Mat m = Mat::identity(spec.n, F);
                m.at(r, c) = F.from_log(j);
                gens.push_back(m);
            }
        }
    if (spec.t < spec.q - 1) {
        Mat d = Mat::identity(spec.n, F);
        d.at(0, 0) = F.from_log(spec.t);
        gens.push_back(d);
    }
    if (gens.empty()) gens.push_back(Mat::identity(spec.n, F));
    return gens;
}

// Order by repeated squaring against the factorization of a known
// exponent of the ambient group.
inline std::uint64_t element_order(const Mat& m, const ZechField& F, std::uint64_t group_exponent) {
    Mat id = Mat::identity(m.n, F);
    std::uint64_t ord = group_exponent;
    std::uint64_t rem = group_exponent;
    for (std::uint64_t r = 2; r * r <= rem; ++r) {
        if (rem % r != 0) continue;
        while (rem % r == 0) rem /= r;
        while (ord % r == 0 && mat_pow(m, ord / r, F) == id) ord /= r;
    }
    if (rem > 1)
        while (ord % rem == 0 && mat_pow(m, ord / rem, F) == id) ord /= rem;
    return ord;
}

struct ClassInfo {
    std::uint64_t rep_key = 0;
    std::uint64_t size = 0;
    std::uint64_t order = 1;
};

struct ClassData {
    GroupSpec spec;
    std::vector<ClassInfo> classes;
};

// Conjugacy classes by orbit closure under the generating set, seeded in
// ascending key order so representatives are the minimal keys.
inline ClassData conj_classes(const GroupSpec& spec) {
    const ZechField& F = zech_field(spec.q);
    auto keys = enumerate_group(spec);
    auto gens = group_generators(spec);
    std::vector<std::pair<Mat, Mat>> conj;
    conj.reserve(gens.size());
    for (const auto& g : gens) conj.emplace_back(g, mat_inverse(g, F));

    std::uint64_t space = ipow(spec.q, static_cast<unsigned>(spec.n * spec.n));
    std::vector<char> visited(space, 0);
    std::uint64_t exponent = gl_order(spec.n, spec.q);

    ClassData out{spec, {}};
    std::vector<Mat> stack;
    for (std::uint64_t key : keys) {
        if (visited[key]) continue;
        visited[key] = 1;
        stack.push_back(unpack_key(key, spec.n, spec.q));
        std::uint64_t size = 0;
        while (!stack.empty()) {
            Mat m = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& [g, ginv] : conj) {
                Mat y = mat_mul(mat_mul(g, m, F), ginv, F);
                std::uint64_t yk = pack_key(y, spec.q);
                if (!visited[yk]) {
                    visited[yk] = 1;
                    stack.push_back(y);
                }
            }
        }
        ClassInfo info;
        info.rep_key = key;
        info.size = size;
        info.order = element_order(unpack_key(key, spec.n, spec.q), F, exponent);
        out.classes.push_back(info);
    }
    return out;
}

inline std::uint64_t ell_regular_count(const ClassData& data, const EllPrime& ell) {
    std::uint64_t count = 0;
    for (const auto& c : data.classes)
        if (ell.char_zero() || c.order % ell.ell != 0) ++count;
    return count;
}

// Size of the conjugation orbit of g under the given group's generators.
inline std::uint64_t conj_orbit_size(const Mat& g, const GroupSpec& spec) {
    check_key_space(spec.n, spec.q);
    const ZechField& F = zech_field(spec.q);
    auto gens = group_generators(spec);
    std::vector<std::pair<Mat, Mat>> conj;
    for (const auto& gg : gens) conj.emplace_back(gg, mat_inverse(gg, F));

    std::unordered_set<std::uint64_t> seen;
    std::vector<Mat> stack{g};
    seen.insert(pack_key(g, spec.q));
    while (!stack.empty()) {
        Mat m = stack.back();
        stack.pop_back();
        for (const auto& [a, ainv] : conj) {
            Mat y = mat_mul(mat_mul(a, m, F), ainv, F);
            std::uint64_t yk = pack_key(y, spec.q);
            if (seen.insert(yk).second) stack.push_back(y);
        }
    }
    return seen.size();
}

// |g^G| / |g^H| for H <= G; exact integer by construction.
inline std::uint64_t class_splitting(const Mat& g, const GroupSpec& G, const GroupSpec& H) {
    const ZechField& F = zech_field(G.q);
    if (!det_in_group(mat_det(g, F), H, F))
        throw std::invalid_argument("class_splitting: element does not lie in the subgroup");
    std::uint64_t big = conj_orbit_size(g, G);
    std::uint64_t small = conj_orbit_size(g, H);
    if (big % small != 0) throw std::logic_error("class_splitting: non-integral ratio");
    return big / small;
}

inline Mat jordan_unipotent(const Partition& lam, std::uint64_t q) {
    const ZechField& F = zech_field(q);
    int n = lam.size();
    if (n > kMaxMatDim) throw capacity_error("jordan_unipotent: dimension capped at 4");
    Mat m = Mat::identity(n, F);
    int offset = 0;
    for (int part : lam.parts()) {
        for (int i = 0; i + 1 < part; ++i) m.at(offset + i, offset + i + 1) = F.one();
        offset += part;
    }
    return m;
}

// Minimal generator exponent t (dividing q-1) with det(C(u)) = <g^t>,
// found by a streaming scan of the full centralizer.
inline std::uint64_t det_image_of_centralizer(const Partition& lam, std::uint64_t q) {
    const ZechField& F = zech_field(q);
    int n = lam.size();
    Mat u = jordan_unipotent(lam, q);
    std::uint64_t t = F.unit_order();
    stream_invertible(n, F, [&](const Mat& m) {
        if (mat_mul(m, u, F) == mat_mul(u, m, F))
            t = std::gcd(t, F.log(mat_det(m, F)));
    });
    return t == 0 ? F.unit_order() : t;
}

namespace detail {

// The subfield F_q of F_{q^d} is unique as a set, but naming its elements
// with base-field ids needs an honest field isomorphism, not just a
// multiplicative one. We pin the embedding by sending the base generator
// to the smallest-log root of the base field's primitive polynomial
// inside F_{q^d}.
struct SubfieldMap {
    std::uint64_t s = 1;    // (q^d-1)/(q-1)
    std::uint64_t jinv = 0; // inverse of the chosen root index mod q-1

    static SubfieldMap make(const ZechField& F, const ZechField& Fd) {
        std::uint64_t q = F.q();
        SubfieldMap out;
        out.s = (Fd.q() - 1) / (q - 1);

        // base primitive polynomial with prime-field coefficients lifted
        // into Fd
        std::vector<std::uint32_t> lifted(F.f() + 1);
        std::uint64_t code = F.poly_code();
        for (unsigned i = 0; i < F.f(); ++i) {
            std::uint32_t c = code % F.p();
            code /= F.p();
            std::uint32_t x = 0;
            for (std::uint32_t rep = 0; rep < c; ++rep) x = Fd.add(x, Fd.one());
            lifted[i] = x;
        }
        lifted[F.f()] = Fd.one();

        std::uint64_t root_index = 0;
        for (std::uint64_t j = 0; j < q - 1; ++j) {
            std::uint32_t arg = Fd.from_log(out.s * j);
            std::uint32_t val = 0;
            for (unsigned i = F.f() + 1; i-- > 0;)
                val = Fd.add(Fd.mul(val, arg), lifted[i]);
            if (val == 0) { root_index = j; break; }
        }
        if (q > 2) {
            std::uint64_t j = root_index, inv = 0;
            for (std::uint64_t k = 0; k < q - 1; ++k)
                if (j * k % (q - 1) == 1) { inv = k; break; }
            if (inv == 0) throw std::logic_error("subfield embedding: root is not primitive");
            out.jinv = inv;
        }
        return out;
    }

    std::uint32_t down(std::uint32_t id, const ZechField& F, const ZechField& Fd) const {
        if (id == 0) return 0;
        std::uint64_t lg = Fd.log(id);
        if (lg % s != 0) throw std::logic_error("subfield embedding: element outside base field");
        return F.from_log(lg / s * jinv);
    }
};

// Minimal polynomial over F_q of the degree-d element with the given
// tower exponent, computed in F_{q^d} as prod_i (x - G^{e q^i}) and
// mapped down through the subfield embedding. The tower generator eps_d
// is identified with the Zech generator of F_{q^d}; every quantity
// compared across the two models is invariant under this choice.
inline std::vector<std::uint32_t> min_poly(std::uint64_t q, unsigned d, std::uint64_t e) {
    const ZechField& F = zech_field(q);
    if (d == 1) {
        std::uint32_t root = F.from_log(e);
        return {F.neg(root), F.one()};
    }
    std::uint64_t qd = ipow(q, d);
    const ZechField& Fd = zech_field(qd);
    std::uint64_t m = qd - 1;

    std::vector<std::uint32_t> poly{Fd.one()};
    std::uint64_t root_exp = e % m;
    for (unsigned i = 0; i < d; ++i) {
        std::uint32_t root = Fd.from_log(root_exp);
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = Fd.add(next[j + 1], poly[j]);
            next[j] = Fd.sub(next[j], Fd.mul(root, poly[j]));
        }
        poly = std::move(next);
        root_exp = root_exp * (q % m) % m;
    }

    auto sub = SubfieldMap::make(F, Fd);
    std::vector<std::uint32_t> out(poly.size());
    for (std::size_t j = 0; j < poly.size(); ++j)
        out[j] = sub.down(poly[j], F, Fd);
    return out;
}

inline std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           const ZechField& F) {
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    return out;
}

inline void place_companion(Mat& m, const std::vector<std::uint32_t>& poly, int offset,
                            const ZechField& F) {
    int deg = static_cast<int>(poly.size()) - 1;
    for (int i = 0; i + 1 < deg; ++i) m.at(offset + i + 1, offset + i) = F.one();
    for (int i = 0; i < deg; ++i) m.at(offset + i, offset + deg - 1) = F.neg(poly[i]);
}

} // namespace detail

// Block-diagonal representative of the class (s, mu): one companion block
// of (min poly of sigma_i)^m per part m of mu^(i). The F_q[x]-module of a
// Jordan block of size m over the eigenvalue field is cyclic with that
// characteristic polynomial, so this block realizes exactly the Jordan
// type mu^(i).
inline Mat class_rep(const SymbolCtx& ctx, const ClassLabel& label) {
    int n = label_n(label);
    if (n > kMaxMatDim) throw capacity_error("class_rep: dimension capped at 4");
    const ZechField& F = zech_field(ctx.q());
    Mat m;
    m.n = n;
    int offset = 0;
    for (std::size_t i = 0; i < label.ss.blocks.size(); ++i) {
        const auto& block = label.ss.blocks[i];
        auto base = detail::min_poly(ctx.q(), block.cls.level, block.cls.exp);
        for (int part : label.mp[i].parts()) {
            std::vector<std::uint32_t> pw{F.one()};
            for (int j = 0; j < part; ++j) pw = detail::poly_mul(pw, base, F);
            detail::place_companion(m, pw, offset, F);
            offset += part * static_cast<int>(block.cls.level);
        }
    }
    return m;
}

inline Mat semisimple_rep(const SymbolCtx& ctx, const SemisimpleLabel& ss) {
    ClassLabel label{ss, {}};
    label.mp.reserve(ss.blocks.size());
    for (const auto& b : ss.blocks)
        label.mp.push_back(Partition(std::vector<int>(b.mult, 1)));
    return class_rep(ctx, label);
}

} // namespace slnq
