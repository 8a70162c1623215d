#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modreg/errors.hpp"

namespace modreg {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// Finite associative unital ring presented by additive generators b_1..b_k of
// orders n_1..n_k and structure constants for the products b_i * b_j.
// Elements are mixed-radix indices of their coefficient vectors; index order
// is lexicographic order on coefficients.  All invariants (well-definedness,
// associativity on basis triples, unity) are validated at construction.
class FiniteRing {
  public:
    // --- presets -----------------------------------------------------------
    static RingPtr zmod(long n, const Limits& limits = default_limits());
    static RingPtr product(std::vector<RingPtr> parts, const Limits& limits = default_limits());
    // (Z/n)[x]/(f), f monic, coefficients constant-first, f.back() == 1.
    static RingPtr poly_quotient(long n, std::vector<long> monic, const Limits& limits = default_limits());
    // size x size upper triangular matrices over the field Z/q, q prime.
    static RingPtr upper_triangular(long q, int size, const Limits& limits = default_limits());
    static RingPtr from_structure(std::vector<long> additive_orders,
                                  std::vector<std::vector<std::vector<long>>> mul_table,
                                  std::vector<long> one,
                                  const Limits& limits = default_limits());

    // --- shape -------------------------------------------------------------
    long size() const { return size_; }
    int gen_count() const { return static_cast<int>(orders_.size()); }
    const std::vector<long>& additive_orders() const { return orders_; }
    bool commutative() const { return commutative_; }
    // identical presentation: same orders, same structure constants, same unit
    bool same_presentation(const FiniteRing& other) const {
        return orders_ == other.orders_ && basis_mul_ == other.basis_mul_ && one_ == other.one_;
    }

    // --- element encoding ---------------------------------------------------
    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    std::vector<long> coeffs(Elem x) const;
    Elem encode(std::span<const long> coeffs) const;  // coefficients reduced mod orders

    // --- arithmetic ----------------------------------------------------------
    Elem add(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const;
    Elem smul(long c, Elem x) const;  // additive scaling c * x
    Elem pow(Elem x, long n) const;   // n >= 1
    long additive_order(Elem x) const;
    Elem basis_elem(int i) const;     // b_i
    Elem mul_basis(Elem x, int j) const;  // x * b_j

    std::string show(Elem x) const;  // "[c1,c2,...]" rendering

  private:
    FiniteRing() = default;
    void finish(const Limits& limits);  // derives strides/size, validates, builds caches

    std::vector<long> orders_;
    std::vector<long> strides_;
    long size_ = 0;
    Elem one_ = 0;
    std::vector<Elem> basis_mul_;  // k*k, product of basis pairs
    bool commutative_ = false;

    // caches
    std::vector<Elem> col_mul_;    // size*k, x * b_j
    std::vector<Elem> add_table_;  // size*size when small enough
    std::vector<Elem> mul_table_;
    std::vector<Elem> neg_table_;

    Elem mul_raw(Elem x, Elem y) const;
};

// Generated additive-and-right-multiplication closed subset.
struct RightIdeal {
    std::vector<Elem> elems;  // sorted, canonical
    std::vector<Elem> gens;
    bool contains(Elem x) const;
};

struct LocalFactor {
    RingPtr ring;                     // the factor Re
    std::vector<Elem> to_parent;      // factor element -> element of R
    std::vector<int> from_parent;     // R element -> factor element or -1
};

struct LocalDecomposition {
    std::vector<Elem> idempotents;    // primitive, orthogonal, summing to 1
    std::vector<LocalFactor> factors;
};

// l_R(a) = {x : xa = 0},  r_R(a) = {x : ax = 0}
std::vector<Elem> left_annihilator(const FiniteRing& R, Elem a);
std::vector<Elem> right_annihilator(const FiniteRing& R, Elem a);
// r_R(X) = {y : xy = 0 for all x in X} and dually.
std::vector<Elem> right_annihilator_of_set(const FiniteRing& R, std::span<const Elem> xs);
std::vector<Elem> left_annihilator_of_set(const FiniteRing& R, std::span<const Elem> xs);

std::vector<Elem> idempotents(const FiniteRing& R);
std::vector<Elem> units(const FiniteRing& R);
bool is_nilpotent(const FiniteRing& R, Elem a);

RightIdeal principal_right_ideal(const FiniteRing& R, Elem a);
RightIdeal right_ideal_generated(const FiniteRing& R, std::span<const Elem> gens);
// Full lattice of right ideals, deterministic order (by size, then elements).
std::vector<RightIdeal> right_ideals(const FiniteRing& R, const Limits& limits = default_limits());

LocalDecomposition local_decomposition(const RingPtr& R, const Limits& limits = default_limits());

// Rebuild a FiniteRing from an abstract multiplication structure over indices
// 0..n-1 (used for endomorphism rings, quotient rings and local factors).
struct RingFromTable {
    RingPtr ring;
    std::vector<Elem> to_ring;    // abstract index -> ring element
    std::vector<int> from_ring;   // ring element -> abstract index
};
RingFromTable ring_from_table(int n, const std::function<int(int, int)>& add,
                              const std::function<int(int, int)>& mul, int zero, int one,
                              const Limits& limits = default_limits());

// Quotient by a two-sided ideal (given as its element set).
RingFromTable quotient_ring(const RingPtr& R, std::span<const Elem> ideal,
                            const Limits& limits = default_limits());

// Exhaustive unital ring isomorphism search (additive-order pruned).
bool is_ring_isomorphic(const FiniteRing& A, const FiniteRing& B,
                        const Limits& limits = default_limits());

}  // namespace modreg
