#include "modreg/ring.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "modreg/abelian.hpp"

namespace modreg {

namespace {

constexpr long kTableMaxOrder = 2048;  // full add/mul tables below this

std::vector<long> reduce_coeffs(std::span<const long> c, const std::vector<long>& orders) {
    std::vector<long> out(orders.size());
    for (size_t q = 0; q < orders.size(); ++q) {
        long v = c[q] % orders[q];
        if (v < 0) v += orders[q];
        out[q] = v;
    }
    return out;
}

}  // namespace

std::vector<long> FiniteRing::coeffs(Elem x) const {
    std::vector<long> c(orders_.size());
    long v = static_cast<long>(x);
    for (size_t q = 0; q < orders_.size(); ++q) {
        c[q] = v / strides_[q];
        v %= strides_[q];
    }
    return c;
}

Elem FiniteRing::encode(std::span<const long> coeffs) const {
    long idx = 0;
    for (size_t q = 0; q < orders_.size(); ++q) {
        long v = coeffs[q] % orders_[q];
        if (v < 0) v += orders_[q];
        idx += v * strides_[q];
    }
    return static_cast<Elem>(idx);
}

Elem FiniteRing::add(Elem x, Elem y) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(x) * static_cast<size_t>(size_) + y];
    auto cx = coeffs(x), cy = coeffs(y);
    for (size_t q = 0; q < cx.size(); ++q) cx[q] += cy[q];
    return encode(cx);
}

Elem FiniteRing::neg(Elem x) const {
    if (!neg_table_.empty()) return neg_table_[x];
    auto c = coeffs(x);
    for (size_t q = 0; q < c.size(); ++q) c[q] = (orders_[q] - c[q]) % orders_[q];
    return encode(c);
}

Elem FiniteRing::smul(long c, Elem x) const {
    auto cx = coeffs(x);
    for (size_t q = 0; q < cx.size(); ++q) cx[q] = (cx[q] * (c % orders_[q])) % orders_[q];
    for (size_t q = 0; q < cx.size(); ++q)
        if (cx[q] < 0) cx[q] += orders_[q];
    return encode(cx);
}

Elem FiniteRing::basis_elem(int i) const { return static_cast<Elem>(strides_[static_cast<size_t>(i)]); }

Elem FiniteRing::mul_basis(Elem x, int j) const {
    if (!col_mul_.empty()) return col_mul_[static_cast<size_t>(x) * orders_.size() + static_cast<size_t>(j)];
    return mul_raw(x, basis_elem(j));
}

Elem FiniteRing::mul_raw(Elem x, Elem y) const {
    const size_t k = orders_.size();
    auto cx = coeffs(x), cy = coeffs(y);
    std::vector<long long> acc(k, 0);
    for (size_t i = 0; i < k; ++i) {
        if (cx[i] == 0) continue;
        for (size_t j = 0; j < k; ++j) {
            if (cy[j] == 0) continue;
            auto bm = coeffs(basis_mul_[i * k + j]);
            for (size_t q = 0; q < k; ++q) acc[q] += static_cast<long long>(cx[i]) * cy[j] * bm[q];
        }
    }
    std::vector<long> out(k);
    for (size_t q = 0; q < k; ++q) out[q] = static_cast<long>(acc[q] % orders_[q]);
    return encode(out);
}

Elem FiniteRing::mul(Elem x, Elem y) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(x) * static_cast<size_t>(size_) + y];
    if (!col_mul_.empty()) {
        const size_t k = orders_.size();
        auto cy = coeffs(y);
        std::vector<long long> acc(k, 0);
        for (size_t j = 0; j < k; ++j) {
            if (cy[j] == 0) continue;
            auto w = coeffs(col_mul_[static_cast<size_t>(x) * k + j]);
            for (size_t q = 0; q < k; ++q) acc[q] += static_cast<long long>(cy[j]) * w[q];
        }
        std::vector<long> out(k);
        for (size_t q = 0; q < k; ++q) out[q] = static_cast<long>(acc[q] % orders_[q]);
        return encode(out);
    }
    return mul_raw(x, y);
}

Elem FiniteRing::pow(Elem x, long n) const {
    Elem r = x;
    for (long i = 1; i < n; ++i) r = mul(r, x);
    return r;
}

long FiniteRing::additive_order(Elem x) const {
    auto c = coeffs(x);
    long ord = 1;
    for (size_t q = 0; q < c.size(); ++q) {
        long o = orders_[q] / std::gcd(orders_[q], c[q] == 0 ? orders_[q] : c[q]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::string FiniteRing::show(Elem x) const {
    auto c = coeffs(x);
    std::ostringstream os;
    os << '[';
    for (size_t q = 0; q < c.size(); ++q) os << (q ? "," : "") << c[q];
    os << ']';
    return os.str();
}

void FiniteRing::finish(const Limits& limits) {
    const size_t k = orders_.size();
    for (long n : orders_)
        if (n <= 0) throw InvalidParameterError("additive order must be positive");
    long size = 1;
    for (long n : orders_) {
        if (size > limits.max_ring_order / n) throw ResourceLimitError("ring order exceeds cap");
        size *= n;
    }
    size_ = size;
    strides_.assign(k, 1);
    for (size_t q = k; q-- > 1;) strides_[q - 1] = strides_[q] * orders_[q];

    // well-definedness: n_i * (b_i b_j) = 0 and n_j * (b_i b_j) = 0
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Elem p = basis_mul_[i * k + j];
            if (smul(orders_[i], p) != 0 || smul(orders_[j], p) != 0)
                throw InvalidStructureError("structure constants ill-defined at basis pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    // associativity on basis triples
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            for (size_t l = 0; l < k; ++l) {
                Elem lhs = mul_raw(basis_mul_[i * k + j], basis_elem(static_cast<int>(l)));
                Elem rhs = mul_raw(basis_elem(static_cast<int>(i)), basis_mul_[j * k + l]);
                if (lhs != rhs)
                    throw InvalidStructureError("associativity fails on basis triple (" + std::to_string(i) +
                                                "," + std::to_string(j) + "," + std::to_string(l) + ")");
            }
    // unity
    for (size_t i = 0; i < k; ++i) {
        Elem b = basis_elem(static_cast<int>(i));
        if (mul_raw(one_, b) != b || mul_raw(b, one_) != b)
            throw InvalidStructureError("unit element fails on basis element " + std::to_string(i));
    }
    commutative_ = true;
    for (size_t i = 0; i < k && commutative_; ++i)
        for (size_t j = 0; j < k; ++j)
            if (basis_mul_[i * k + j] != basis_mul_[j * k + i]) {
                commutative_ = false;
                break;
            }

    col_mul_.resize(static_cast<size_t>(size_) * k);
    for (long x = 0; x < size_; ++x)
        for (size_t j = 0; j < k; ++j)
            col_mul_[static_cast<size_t>(x) * k + j] = mul_raw(static_cast<Elem>(x), basis_elem(static_cast<int>(j)));
    if (size_ <= kTableMaxOrder) {
        neg_table_.resize(static_cast<size_t>(size_));
        for (long x = 0; x < size_; ++x) {
            neg_table_[static_cast<size_t>(x)] = 0;  // placeholder until filled below
        }
        add_table_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
        mul_table_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
        for (long x = 0; x < size_; ++x) {
            for (long y = 0; y < size_; ++y) {
                auto cx = coeffs(static_cast<Elem>(x));
                auto cy = coeffs(static_cast<Elem>(y));
                for (size_t q = 0; q < k; ++q) cx[q] += cy[q];
                Elem s = encode(cx);
                add_table_[static_cast<size_t>(x) * static_cast<size_t>(size_) + static_cast<size_t>(y)] = s;
                if (s == 0) neg_table_[static_cast<size_t>(x)] = static_cast<Elem>(y);
                mul_table_[static_cast<size_t>(x) * static_cast<size_t>(size_) + static_cast<size_t>(y)] =
                    mul_raw(static_cast<Elem>(x), static_cast<Elem>(y));
            }
        }
    }
}

RingPtr FiniteRing::from_structure(std::vector<long> additive_orders,
                                   std::vector<std::vector<std::vector<long>>> mul_table,
                                   std::vector<long> one, const Limits& limits) {
    const size_t k = additive_orders.size();
    if (mul_table.size() != k) throw InvalidStructureError("mul table must have one row per generator");
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->orders_ = std::move(additive_orders);
    for (long n : ring->orders_)
        if (n <= 0) throw InvalidParameterError("additive order must be positive");
    // strides needed before encode
    ring->strides_.assign(k, 1);
    for (size_t q = k; q-- > 1;) ring->strides_[q - 1] = ring->strides_[q] * ring->orders_[q];
    ring->basis_mul_.resize(k * k);
    for (size_t i = 0; i < k; ++i) {
        if (mul_table[i].size() != k) throw InvalidStructureError("mul table row has wrong length");
        for (size_t j = 0; j < k; ++j) {
            const auto& v = mul_table[i][j];
            if (v.size() != k) throw InvalidStructureError("mul table entry has wrong length");
            for (size_t q = 0; q < k; ++q)
                if (v[q] < 0 || v[q] >= ring->orders_[q])
                    throw InvalidStructureError("mul table coefficient out of range");
            ring->basis_mul_[i * k + j] = ring->encode(v);
        }
    }
    if (one.size() != k) throw InvalidStructureError("unit coefficient vector has wrong length");
    for (size_t q = 0; q < k; ++q)
        if (one[q] < 0 || one[q] >= ring->orders_[q]) throw InvalidStructureError("unit coefficient out of range");
    ring->one_ = ring->encode(one);
    ring->finish(limits);
    return ring;
}

RingPtr FiniteRing::zmod(long n, const Limits& limits) {
    if (n <= 0) throw InvalidParameterError("zmod modulus must be positive");
    return from_structure({n}, {{{1 % n}}}, {1 % n}, limits);
}

RingPtr FiniteRing::product(std::vector<RingPtr> parts, const Limits& limits) {
    std::vector<long> orders;
    std::vector<size_t> offset;
    for (const auto& p : parts) {
        offset.push_back(orders.size());
        for (long n : p->additive_orders()) orders.push_back(n);
    }
    const size_t k = orders.size();
    std::vector<std::vector<std::vector<long>>> table(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    std::vector<long> one(k, 0);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& P = *parts[pi];
        const size_t kp = static_cast<size_t>(P.gen_count());
        const size_t off = offset[pi];
        for (size_t i = 0; i < kp; ++i)
            for (size_t j = 0; j < kp; ++j) {
                auto v = P.coeffs(P.mul_basis(P.basis_elem(static_cast<int>(i)), static_cast<int>(j)));
                for (size_t q = 0; q < kp; ++q) table[off + i][off + j][off + q] = v[q];
            }
        auto vone = P.coeffs(P.one());
        for (size_t q = 0; q < kp; ++q) one[off + q] = vone[q];
    }
    return from_structure(std::move(orders), std::move(table), std::move(one), limits);
}

namespace {
// remainder of x^e modulo monic f over Z/n, coefficients constant-first
std::vector<long> xpow_mod(long e, const std::vector<long>& f, long n) {
    const size_t m = f.size() - 1;
    std::vector<long> r(m + static_cast<size_t>(e) + 1, 0);
    r[static_cast<size_t>(e)] = 1;
    for (size_t d = r.size(); d-- > m;) {
        long c = r[d] % n;
        if (c == 0) continue;
        r[d] = 0;
        for (size_t q = 0; q < m; ++q) {
            r[d - m + q] = ((r[d - m + q] - c * f[q]) % n + n * n) % n;
        }
    }
    r.resize(m);
    for (auto& c : r) c = ((c % n) + n) % n;
    return r;
}
}  // namespace

RingPtr FiniteRing::poly_quotient(long n, std::vector<long> monic, const Limits& limits) {
    if (n <= 0) throw InvalidParameterError("coefficient modulus must be positive");
    if (monic.size() < 2) throw InvalidParameterError("modulus polynomial must have degree at least 1");
    for (auto& c : monic) c = ((c % n) + n) % n;
    if (monic.back() != 1 % n) throw InvalidParameterError("modulus polynomial must be monic");
    const size_t m = monic.size() - 1;
    std::vector<long> orders(m, n);
    std::vector<std::vector<std::vector<long>>> table(m, std::vector<std::vector<long>>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) table[i][j] = xpow_mod(static_cast<long>(i + j), monic, n);
    std::vector<long> one(m, 0);
    one[0] = 1 % n;
    return from_structure(std::move(orders), std::move(table), std::move(one), limits);
}

RingPtr FiniteRing::upper_triangular(long q, int size, const Limits& limits) {
    if (size <= 0) throw InvalidParameterError("matrix size must be positive");
    if (q < 2) throw InvalidParameterError("field order must be at least 2");
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) throw InvalidParameterError("only prime field orders are supported here");
    std::vector<std::pair<int, int>> pos;  // (row, col), row <= col
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) pos.emplace_back(i, j);
    const size_t k = pos.size();
    auto index_of = [&](int i, int j) {
        for (size_t t = 0; t < k; ++t)
            if (pos[t] == std::make_pair(i, j)) return static_cast<long>(t);
        return -1L;
    };
    std::vector<long> orders(k, q);
    std::vector<std::vector<std::vector<long>>> table(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            auto [i, j] = pos[a];
            auto [l, m] = pos[b];
            if (j == l) table[a][b][static_cast<size_t>(index_of(i, m))] = 1 % q;
        }
    std::vector<long> one(k, 0);
    for (int i = 0; i < size; ++i) one[static_cast<size_t>(index_of(i, i))] = 1 % q;
    return from_structure(std::move(orders), std::move(table), std::move(one), limits);
}

// ---------------------------------------------------------------------------

std::vector<Elem> left_annihilator(const FiniteRing& R, Elem a) {
    std::vector<Elem> out;
    for (long x = 0; x < R.size(); ++x)
        if (R.mul(static_cast<Elem>(x), a) == R.zero()) out.push_back(static_cast<Elem>(x));
    return out;
}

std::vector<Elem> right_annihilator(const FiniteRing& R, Elem a) {
    std::vector<Elem> out;
    for (long x = 0; x < R.size(); ++x)
        if (R.mul(a, static_cast<Elem>(x)) == R.zero()) out.push_back(static_cast<Elem>(x));
    return out;
}

std::vector<Elem> right_annihilator_of_set(const FiniteRing& R, std::span<const Elem> xs) {
    std::vector<Elem> out;
    for (long y = 0; y < R.size(); ++y) {
        bool ok = true;
        for (Elem x : xs)
            if (R.mul(x, static_cast<Elem>(y)) != R.zero()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<Elem>(y));
    }
    return out;
}

std::vector<Elem> left_annihilator_of_set(const FiniteRing& R, std::span<const Elem> xs) {
    std::vector<Elem> out;
    for (long y = 0; y < R.size(); ++y) {
        bool ok = true;
        for (Elem x : xs)
            if (R.mul(static_cast<Elem>(y), x) != R.zero()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<Elem>(y));
    }
    return out;
}

std::vector<Elem> idempotents(const FiniteRing& R) {
    std::vector<Elem> out;
    for (long e = 0; e < R.size(); ++e)
        if (R.mul(static_cast<Elem>(e), static_cast<Elem>(e)) == static_cast<Elem>(e))
            out.push_back(static_cast<Elem>(e));
    return out;
}

std::vector<Elem> units(const FiniteRing& R) {
    std::vector<Elem> out;
    for (long u = 0; u < R.size(); ++u) {
        for (long v = 0; v < R.size(); ++v)
            if (R.mul(static_cast<Elem>(u), static_cast<Elem>(v)) == R.one() &&
                R.mul(static_cast<Elem>(v), static_cast<Elem>(u)) == R.one()) {
                out.push_back(static_cast<Elem>(u));
                break;
            }
    }
    return out;
}

bool is_nilpotent(const FiniteRing& R, Elem a) {
    // a^(2^i) visits 0 iff a is nilpotent; the sequence stabilizes within
    // log2(|R|)+1 squarings because the nilpotency index is at most |R|.
    Elem cur = a;
    long steps = 0;
    for (long bound = R.size(); (1L << steps) <= bound; ++steps) {
        if (cur == R.zero()) return true;
        cur = R.mul(cur, cur);
    }
    return cur == R.zero();
}

bool RightIdeal::contains(Elem x) const { return std::binary_search(elems.begin(), elems.end(), x); }

RightIdeal right_ideal_generated(const FiniteRing& R, std::span<const Elem> gens) {
    std::vector<char> in(static_cast<size_t>(R.size()), 0);
    std::vector<Elem> rec;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            rec.push_back(x);
        }
    };
    push(R.zero());
    for (Elem g : gens) push(g);
    for (size_t qi = 0; qi < rec.size(); ++qi) {
        Elem x = rec[qi];
        for (size_t j = 0; j <= qi; ++j) push(R.add(x, rec[j]));
        for (int b = 0; b < R.gen_count(); ++b) push(R.mul_basis(x, b));
    }
    RightIdeal out;
    out.gens.assign(gens.begin(), gens.end());
    out.elems = std::move(rec);
    std::sort(out.elems.begin(), out.elems.end());
    return out;
}

RightIdeal principal_right_ideal(const FiniteRing& R, Elem a) {
    return right_ideal_generated(R, std::vector<Elem>{a});
}

std::vector<RightIdeal> right_ideals(const FiniteRing& R, const Limits& limits) {
    // Iterated joins of principal right ideals starting from {0}.
    std::vector<RightIdeal> cyclics;
    std::set<std::vector<Elem>> seen_cyclic;
    for (long a = 0; a < R.size(); ++a) {
        auto I = principal_right_ideal(R, static_cast<Elem>(a));
        if (seen_cyclic.insert(I.elems).second) cyclics.push_back(std::move(I));
    }
    std::vector<RightIdeal> out;
    std::set<std::vector<Elem>> seen;
    out.push_back(right_ideal_generated(R, std::vector<Elem>{}));
    seen.insert(out[0].elems);
    for (size_t qi = 0; qi < out.size(); ++qi) {
        for (const auto& C : cyclics) {
            bool inside = true;
            for (Elem g : C.gens)
                if (!out[qi].contains(g)) {
                    inside = false;
                    break;
                }
            if (inside) continue;
            std::vector<Elem> gens = out[qi].gens;
            gens.insert(gens.end(), C.gens.begin(), C.gens.end());
            auto J = right_ideal_generated(R, gens);
            if (seen.insert(J.elems).second) {
                out.push_back(std::move(J));
                if (static_cast<long>(out.size()) > limits.max_submodules)
                    throw ResourceLimitError("right ideal lattice exceeds cap");
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RightIdeal& a, const RightIdeal& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return out;
}

// ---------------------------------------------------------------------------

RingFromTable ring_from_table(int n, const std::function<int(int, int)>& add,
                              const std::function<int(int, int)>& mul, int zero, int one,
                              const Limits& limits) {
    auto basis = decompose_abelian(n, add, zero);
    const size_t k = basis.gens.size();
    std::vector<std::vector<std::vector<long>>> table(k, std::vector<std::vector<long>>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) table[i][j] = basis.coords[static_cast<size_t>(mul(basis.gens[i], basis.gens[j]))];
    RingFromTable out;
    out.ring = FiniteRing::from_structure(basis.orders, std::move(table),
                                          basis.coords[static_cast<size_t>(one)], limits);
    out.to_ring.resize(static_cast<size_t>(n));
    out.from_ring.assign(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        Elem e = out.ring->encode(basis.coords[static_cast<size_t>(x)]);
        out.to_ring[static_cast<size_t>(x)] = e;
        out.from_ring[e] = x;
    }
    return out;
}

RingFromTable quotient_ring(const RingPtr& R, std::span<const Elem> ideal, const Limits& limits) {
    std::vector<char> in(static_cast<size_t>(R->size()), 0);
    for (Elem x : ideal) in[x] = 1;
    for (Elem x : ideal)
        for (int b = 0; b < R->gen_count(); ++b) {
            if (!in[R->mul_basis(x, b)] || !in[R->mul(R->basis_elem(b), x)])
                throw InvalidParameterError("quotient requires a two-sided ideal");
        }
    // coset representative: smallest element index in x + I
    std::vector<int> rep(static_cast<size_t>(R->size()), -1);
    for (long x = 0; x < R->size(); ++x) {
        Elem best = static_cast<Elem>(x);
        for (Elem i : ideal) best = std::min(best, R->add(static_cast<Elem>(x), i));
        rep[static_cast<size_t>(x)] = static_cast<int>(best);
    }
    std::vector<int> reps;
    for (long x = 0; x < R->size(); ++x)
        if (rep[static_cast<size_t>(x)] == x) reps.push_back(static_cast<int>(x));
    std::vector<int> qindex(static_cast<size_t>(R->size()), -1);
    for (size_t i = 0; i < reps.size(); ++i) qindex[static_cast<size_t>(reps[i])] = static_cast<int>(i);
    auto qadd = [&](int i, int j) {
        return qindex[static_cast<size_t>(rep[R->add(static_cast<Elem>(reps[static_cast<size_t>(i)]),
                                                     static_cast<Elem>(reps[static_cast<size_t>(j)]))])];
    };
    auto qmul = [&](int i, int j) {
        return qindex[static_cast<size_t>(rep[R->mul(static_cast<Elem>(reps[static_cast<size_t>(i)]),
                                                     static_cast<Elem>(reps[static_cast<size_t>(j)]))])];
    };
    auto built = ring_from_table(static_cast<int>(reps.size()), qadd, qmul,
                                 qindex[static_cast<size_t>(rep[R->zero()])],
                                 qindex[static_cast<size_t>(rep[R->one()])], limits);
    // remap the abstract index through the coset representatives so callers can
    // project arbitrary ring elements
    RingFromTable out;
    out.ring = built.ring;
    out.to_ring.resize(static_cast<size_t>(R->size()));
    for (long x = 0; x < R->size(); ++x)
        out.to_ring[static_cast<size_t>(x)] =
            built.to_ring[static_cast<size_t>(qindex[static_cast<size_t>(rep[static_cast<size_t>(x)])])];
    out.from_ring.assign(static_cast<size_t>(out.ring->size()), -1);
    for (size_t i = 0; i < reps.size(); ++i)
        out.from_ring[built.to_ring[i]] = reps[i];
    return out;
}

LocalDecomposition local_decomposition(const RingPtr& R, const Limits& limits) {
    if (!R->commutative()) throw NotCommutativeError("local decomposition requires a commutative ring");
    auto idems = idempotents(*R);
    std::vector<Elem> primitive;
    for (Elem e : idems) {
        if (e == R->zero()) continue;
        // e is primitive iff the only idempotents below it (f with ef = f) are 0 and e
        bool prim = true;
        for (Elem f : idems) {
            if (f == R->zero() || f == e) continue;
            if (R->mul(e, f) == f) {
                prim = false;
                break;
            }
        }
        if (prim) primitive.push_back(e);
    }
    // orthogonality and completeness are forced for commutative rings; verify
    Elem sum = R->zero();
    for (size_t i = 0; i < primitive.size(); ++i) {
        for (size_t j = i + 1; j < primitive.size(); ++j)
            if (R->mul(primitive[i], primitive[j]) != R->zero())
                throw InvalidStructureError("primitive idempotents are not orthogonal");
        sum = R->add(sum, primitive[i]);
    }
    if (sum != R->one()) throw InvalidStructureError("primitive idempotents do not sum to 1");

    LocalDecomposition out;
    out.idempotents = primitive;
    for (Elem e : primitive) {
        std::vector<Elem> subset;
        std::vector<int> sub_index(static_cast<size_t>(R->size()), -1);
        for (long x = 0; x < R->size(); ++x) {
            Elem y = R->mul(e, static_cast<Elem>(x));
            if (sub_index[y] < 0) {
                sub_index[y] = 0;  // mark
                subset.push_back(y);
            }
        }
        std::sort(subset.begin(), subset.end());
        std::fill(sub_index.begin(), sub_index.end(), -1);
        for (size_t i = 0; i < subset.size(); ++i) sub_index[subset[i]] = static_cast<int>(i);
        auto fadd = [&](int i, int j) {
            return sub_index[R->add(subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)])];
        };
        auto fmul = [&](int i, int j) {
            return sub_index[R->mul(subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)])];
        };
        auto built = ring_from_table(static_cast<int>(subset.size()), fadd, fmul, sub_index[R->zero()],
                                     sub_index[e], limits);
        LocalFactor factor;
        factor.ring = built.ring;
        factor.to_parent.resize(static_cast<size_t>(built.ring->size()));
        factor.from_parent.assign(static_cast<size_t>(R->size()), -1);
        for (size_t i = 0; i < subset.size(); ++i) {
            factor.to_parent[built.to_ring[i]] = subset[i];
            factor.from_parent[subset[i]] = static_cast<int>(built.to_ring[i]);
        }
        // sanity: the factor must be local (non-units form an ideal)
        auto us = units(*factor.ring);
        std::vector<char> is_unit(static_cast<size_t>(factor.ring->size()), 0);
        for (Elem u : us) is_unit[u] = 1;
        for (long x = 0; x < factor.ring->size(); ++x) {
            if (is_unit[static_cast<size_t>(x)]) continue;
            for (long y = 0; y < factor.ring->size(); ++y) {
                if (!is_unit[static_cast<size_t>(y)] &&
                    is_unit[factor.ring->add(static_cast<Elem>(x), static_cast<Elem>(y))])
                    throw InvalidStructureError("factor by a primitive idempotent is not local");
                if (is_unit[factor.ring->mul(static_cast<Elem>(x), static_cast<Elem>(y))])
                    throw InvalidStructureError("factor by a primitive idempotent is not local");
            }
        }
        out.factors.push_back(std::move(factor));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {
std::vector<long> primary_decomposition(const std::vector<long>& orders) {
    std::vector<long> out;
    for (long n : orders) {
        long m = n;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            long pk = 1;
            while (m % p == 0) {
                pk *= p;
                m /= p;
            }
            out.push_back(pk);
        }
        if (m > 1) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

bool is_ring_isomorphic(const FiniteRing& A, const FiniteRing& B, const Limits& limits) {
    if (A.size() != B.size()) return false;
    if (primary_decomposition(A.additive_orders()) != primary_decomposition(B.additive_orders())) return false;
    if (A.commutative() != B.commutative()) return false;

    const int k = A.gen_count();
    // candidates: matching additive order
    std::vector<std::vector<Elem>> cands(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        long d = A.additive_orders()[static_cast<size_t>(i)];
        for (long u = 0; u < B.size(); ++u)
            if (B.additive_order(static_cast<Elem>(u)) == d) cands[static_cast<size_t>(i)].push_back(static_cast<Elem>(u));
        if (cands[static_cast<size_t>(i)].empty()) return false;
    }
    // deferred constraints: check phi(b_i b_j) = u_i u_j at the first stage
    // where every coefficient of b_i b_j is available
    struct Constraint {
        int i, j;
        std::vector<long> coeffs;  // of b_i b_j in A
    };
    std::vector<std::vector<Constraint>> at_stage(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto c = A.coeffs(A.mul_basis(A.basis_elem(i), j));
            int stage = std::max(i, j);
            for (int q = 0; q < k; ++q)
                if (c[static_cast<size_t>(q)] != 0) stage = std::max(stage, q);
            at_stage[static_cast<size_t>(stage)].push_back({i, j, std::move(c)});
        }
    auto cone = A.coeffs(A.one());
    int one_stage = 0;
    for (int q = 0; q < k; ++q)
        if (cone[static_cast<size_t>(q)] != 0) one_stage = std::max(one_stage, q);

    std::vector<Elem> img(static_cast<size_t>(k), 0);
    std::vector<char> used(static_cast<size_t>(B.size()), 0);
    std::vector<std::vector<Elem>> combos(static_cast<size_t>(k) + 1);
    combos[0] = {B.zero()};
    used[B.zero()] = 1;
    long long nodes = 0;

    std::function<bool(int)> dfs = [&](int p) -> bool {
        if (p == k) return true;
        for (Elem u : cands[static_cast<size_t>(p)]) {
            if (++nodes > limits.iso_node_budget) throw ResourceLimitError("ring isomorphism search budget exceeded");
            // extend the partial additive image and check injectivity
            long d = A.additive_orders()[static_cast<size_t>(p)];
            std::vector<Elem> added;
            bool ok = true;
            for (Elem base : combos[static_cast<size_t>(p)]) {
                Elem cur = base;
                for (long c = 1; c < d && ok; ++c) {
                    cur = B.add(cur, u);
                    if (used[cur]) {
                        ok = false;
                        break;
                    }
                    used[cur] = 1;
                    added.push_back(cur);
                }
                if (!ok) break;
            }
            if (ok) {
                img[static_cast<size_t>(p)] = u;
                auto phi_of = [&](const std::vector<long>& c) {
                    Elem v = B.zero();
                    for (int q = 0; q <= p; ++q)
                        v = B.add(v, B.smul(c[static_cast<size_t>(q)], img[static_cast<size_t>(q)]));
                    return v;
                };
                for (const auto& con : at_stage[static_cast<size_t>(p)]) {
                    if (phi_of(con.coeffs) !=
                        B.mul(img[static_cast<size_t>(con.i)], img[static_cast<size_t>(con.j)])) {
                        ok = false;
                        break;
                    }
                }
                if (ok && p == one_stage && phi_of(cone) != B.one()) ok = false;
            }
            if (ok) {
                combos[static_cast<size_t>(p) + 1] = combos[static_cast<size_t>(p)];
                combos[static_cast<size_t>(p) + 1].insert(combos[static_cast<size_t>(p) + 1].end(), added.begin(),
                                                          added.end());
                if (dfs(p + 1)) return true;
            }
            for (Elem x : added) used[x] = 0;
        }
        return false;
    };
    if (k == 0) return B.size() == 1;
    return dfs(0);
}

}  // namespace modreg
