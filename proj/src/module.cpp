#include "modreg/module.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "modreg/abelian.hpp"

namespace modreg {

namespace {
constexpr long kTableMaxOrder = 2048;       // full add table below this
constexpr long long kActTableBudget = 1 << 22;  // full m*a table below this many entries
}  // namespace

std::vector<long> FiniteModule::coeffs(Elem m) const {
    std::vector<long> c(d_.size());
    long v = static_cast<long>(m);
    for (size_t q = 0; q < d_.size(); ++q) {
        c[q] = v / strides_[q];
        v %= strides_[q];
    }
    return c;
}

Elem FiniteModule::encode(std::span<const long> coeffs) const {
    long idx = 0;
    for (size_t q = 0; q < d_.size(); ++q) {
        long v = coeffs[q] % d_[q];
        if (v < 0) v += d_[q];
        idx += v * strides_[q];
    }
    return static_cast<Elem>(idx);
}

Elem FiniteModule::gen_elem(int p) const { return static_cast<Elem>(strides_[static_cast<size_t>(p)]); }

Elem FiniteModule::add(Elem m, Elem n) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(m) * static_cast<size_t>(size_) + n];
    auto cm = coeffs(m), cn = coeffs(n);
    for (size_t q = 0; q < cm.size(); ++q) cm[q] += cn[q];
    return encode(cm);
}

Elem FiniteModule::neg(Elem m) const {
    if (!neg_table_.empty()) return neg_table_[m];
    auto c = coeffs(m);
    for (size_t q = 0; q < c.size(); ++q) c[q] = (d_[q] - c[q]) % d_[q];
    return encode(c);
}

Elem FiniteModule::smul(long c, Elem m) const {
    auto cm = coeffs(m);
    for (size_t q = 0; q < cm.size(); ++q) {
        cm[q] = (cm[q] * (c % d_[q])) % d_[q];
        if (cm[q] < 0) cm[q] += d_[q];
    }
    return encode(cm);
}

Elem FiniteModule::act_raw(Elem m, int i) const {
    const size_t t = d_.size();
    auto cm = coeffs(m);
    const auto& A = action_[static_cast<size_t>(i)];
    std::vector<long> out(t, 0);
    for (size_t p = 0; p < t; ++p) {
        if (cm[p] == 0) continue;
        for (size_t q = 0; q < t; ++q) out[q] += cm[p] * (A[p * t + q] % d_[q]);
    }
    for (size_t q = 0; q < t; ++q) out[q] %= d_[q];
    return encode(out);
}

Elem FiniteModule::act_basis(Elem m, int i) const {
    if (!col_act_.empty()) return col_act_[static_cast<size_t>(m) * action_.size() + static_cast<size_t>(i)];
    return act_raw(m, i);
}

Elem FiniteModule::act(Elem m, Elem a) const {
    const size_t k = action_.size();
    const size_t t = d_.size();
    auto ca = ring_->coeffs(a);
    std::vector<long long> acc(t, 0);
    for (size_t j = 0; j < k; ++j) {
        if (ca[j] == 0) continue;
        auto w = coeffs(act_basis(m, static_cast<int>(j)));
        for (size_t q = 0; q < t; ++q) acc[q] += static_cast<long long>(ca[j]) * w[q];
    }
    std::vector<long> out(t);
    for (size_t q = 0; q < t; ++q) out[q] = static_cast<long>(acc[q] % d_[q]);
    return encode(out);
}

long FiniteModule::additive_order(Elem m) const {
    auto c = coeffs(m);
    long ord = 1;
    for (size_t q = 0; q < c.size(); ++q)
        ord = std::lcm(ord, d_[q] / std::gcd(d_[q], c[q] == 0 ? d_[q] : c[q]));
    return ord;
}

std::string FiniteModule::show(Elem m) const {
    auto c = coeffs(m);
    std::ostringstream os;
    os << '(';
    for (size_t q = 0; q < c.size(); ++q) os << (q ? "," : "") << c[q];
    os << ')';
    return os.str();
}

void FiniteModule::finish(const Limits& limits) {
    const size_t t = d_.size();
    const size_t k = static_cast<size_t>(ring_->gen_count());
    for (long d : d_)
        if (d <= 0) throw InvalidActionError("invariant factor must be positive");
    long size = 1;
    for (long d : d_) {
        if (size > limits.max_module_order / d) throw ResourceLimitError("module order exceeds cap");
        size *= d;
    }
    size_ = size;
    strides_.assign(t, 1);
    for (size_t q = t; q-- > 1;) strides_[q - 1] = strides_[q] * d_[q];

    if (action_.size() != k) throw InvalidActionError("need one action matrix per ring generator");
    const auto& orders = ring_->additive_orders();
    for (size_t i = 0; i < k; ++i) {
        if (action_[i].size() != t * t) throw InvalidActionError("action matrix has wrong shape");
        for (size_t p = 0; p < t; ++p)
            for (size_t q = 0; q < t; ++q) {
                long e = action_[i][p * t + q] % d_[q];
                if (e < 0) e += d_[q];
                action_[i][p * t + q] = e;
                // d_p * A_i[p][q] = 0 mod d_q: the row map g_p -> row p is a hom
                if ((d_[p] * e) % d_[q] != 0)
                    throw InvalidActionError("hom congruence fails at generator " + std::to_string(p) +
                                             ", ring generator " + std::to_string(i));
                // n_i * A_i[p][q] = 0 mod d_q: the action of b_i respects its order
                if ((orders[i] * e) % d_[q] != 0)
                    throw InvalidActionError("action ignores the additive order of ring generator " +
                                             std::to_string(i));
            }
    }
    // unity on generators (additivity extends it to every element)
    for (size_t p = 0; p < t; ++p)
        if (act(gen_elem(static_cast<int>(p)), ring_->one()) != gen_elem(static_cast<int>(p)))
            throw InvalidActionError("unit scalar does not fix generator " + std::to_string(p));
    // compatibility: (g_p * b_i) * b_j = g_p * (b_i b_j) on all generators
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Elem bij = ring_->mul(ring_->basis_elem(static_cast<int>(i)), ring_->basis_elem(static_cast<int>(j)));
            for (size_t p = 0; p < t; ++p) {
                Elem g = gen_elem(static_cast<int>(p));
                if (act(act_raw(g, static_cast<int>(i)), ring_->basis_elem(static_cast<int>(j))) != act(g, bij))
                    throw InvalidActionError("action incompatible with multiplication at basis pair (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }

    col_act_.resize(static_cast<size_t>(size_) * k);
    for (long m = 0; m < size_; ++m)
        for (size_t i = 0; i < k; ++i)
            col_act_[static_cast<size_t>(m) * k + i] = act_raw(static_cast<Elem>(m), static_cast<int>(i));
    if (size_ <= kTableMaxOrder) {
        add_table_.resize(static_cast<size_t>(size_) * static_cast<size_t>(size_));
        neg_table_.assign(static_cast<size_t>(size_), 0);
        for (long m = 0; m < size_; ++m)
            for (long n = 0; n < size_; ++n) {
                auto cm = coeffs(static_cast<Elem>(m));
                auto cn = coeffs(static_cast<Elem>(n));
                for (size_t q = 0; q < t; ++q) cm[q] += cn[q];
                Elem s = encode(cm);
                add_table_[static_cast<size_t>(m) * static_cast<size_t>(size_) + static_cast<size_t>(n)] = s;
                if (s == 0) neg_table_[static_cast<size_t>(m)] = static_cast<Elem>(n);
            }
    }
    (void)kActTableBudget;
}

ModulePtr FiniteModule::from_action(const RingPtr& R, std::vector<long> invariant_factors,
                                    std::vector<std::vector<std::vector<long>>> action, const Limits& limits) {
    auto M = std::shared_ptr<FiniteModule>(new FiniteModule());
    M->ring_ = R;
    M->d_ = std::move(invariant_factors);
    const size_t t = M->d_.size();
    M->action_.reserve(action.size());
    for (auto& mat : action) {
        if (mat.size() != t) throw InvalidActionError("action matrix has wrong number of rows");
        std::vector<long> flat;
        flat.reserve(t * t);
        for (auto& row : mat) {
            if (row.size() != t) throw InvalidActionError("action matrix row has wrong length");
            for (long e : row) flat.push_back(e);
        }
        M->action_.push_back(std::move(flat));
    }
    M->finish(limits);
    return M;
}

ModulePtr FiniteModule::regular(const RingPtr& R, const Limits& limits) {
    const size_t k = static_cast<size_t>(R->gen_count());
    std::vector<std::vector<std::vector<long>>> action(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t p = 0; p < k; ++p) {
            auto c = R->coeffs(R->mul_basis(R->basis_elem(static_cast<int>(p)), static_cast<int>(i)));
            for (size_t q = 0; q < k; ++q) action[i][p][q] = c[q];
        }
    return from_action(R, R->additive_orders(), std::move(action), limits);
}

ModulePtr FiniteModule::direct_sum(std::vector<ModulePtr> parts, const Limits& limits) {
    if (parts.empty()) throw InvalidParameterError("direct sum needs at least one part");
    const RingPtr& R = parts[0]->ring();
    for (const auto& p : parts)
        if (p->ring() != R) throw RingMismatchError("direct sum parts live over different rings");
    std::vector<long> d;
    std::vector<size_t> offset;
    for (const auto& p : parts) {
        offset.push_back(d.size());
        for (long x : p->invariant_factors()) d.push_back(x);
    }
    const size_t t = d.size();
    const size_t k = static_cast<size_t>(R->gen_count());
    std::vector<std::vector<std::vector<long>>> action(
        k, std::vector<std::vector<long>>(t, std::vector<long>(t, 0)));
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& P = *parts[pi];
        const size_t tp = static_cast<size_t>(P.gen_count());
        for (size_t i = 0; i < k; ++i)
            for (size_t p = 0; p < tp; ++p) {
                auto c = P.coeffs(P.act_basis(P.gen_elem(static_cast<int>(p)), static_cast<int>(i)));
                for (size_t q = 0; q < tp; ++q) action[i][offset[pi] + p][offset[pi] + q] = c[q];
            }
    }
    return from_action(R, std::move(d), std::move(action), limits);
}

// ---------------------------------------------------------------------------

bool Submodule::contains(Elem x) const { return std::binary_search(elems.begin(), elems.end(), x); }

std::vector<Elem> raw_scalar_image(const FiniteModule& M, Elem a) {
    std::vector<char> in(static_cast<size_t>(M.size()), 0);
    for (long m = 0; m < M.size(); ++m) in[M.act(static_cast<Elem>(m), a)] = 1;
    std::vector<Elem> out;
    for (long x = 0; x < M.size(); ++x)
        if (in[static_cast<size_t>(x)]) out.push_back(static_cast<Elem>(x));
    return out;
}

std::vector<Elem> raw_scalar_kernel(const FiniteModule& M, Elem a) {
    std::vector<Elem> out;
    for (long m = 0; m < M.size(); ++m)
        if (M.act(static_cast<Elem>(m), a) == M.zero()) out.push_back(static_cast<Elem>(m));
    return out;
}

namespace {
bool action_closed(const FiniteModule& M, const std::vector<Elem>& sorted) {
    for (Elem x : sorted)
        for (int i = 0; i < M.ring()->gen_count(); ++i)
            if (!std::binary_search(sorted.begin(), sorted.end(), M.act_basis(x, i))) return false;
    return true;
}
}  // namespace

Submodule scalar_image(const FiniteModule& M, Elem a) {
    Submodule out;
    out.elems = raw_scalar_image(M, a);
    out.gens = out.elems;
    if (!M.ring()->commutative() && !action_closed(M, out.elems))
        throw NotSubmoduleClosedError("Ma is not scalar-closed; use raw_scalar_image");
    return out;
}

Submodule scalar_kernel(const FiniteModule& M, Elem a) {
    Submodule out;
    out.elems = raw_scalar_kernel(M, a);
    out.gens = out.elems;
    if (!M.ring()->commutative() && !action_closed(M, out.elems))
        throw NotSubmoduleClosedError("l_M(a) is not scalar-closed; use raw_scalar_kernel");
    return out;
}

Submodule submodule_generated(const FiniteModule& M, std::span<const Elem> gens) {
    std::vector<char> in(static_cast<size_t>(M.size()), 0);
    std::vector<Elem> rec;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            rec.push_back(x);
        }
    };
    push(M.zero());
    for (Elem g : gens) push(g);
    for (size_t qi = 0; qi < rec.size(); ++qi) {
        Elem x = rec[qi];
        for (size_t j = 0; j <= qi; ++j) push(M.add(x, rec[j]));
        for (int i = 0; i < M.ring()->gen_count(); ++i) push(M.act_basis(x, i));
    }
    Submodule out;
    out.gens.assign(gens.begin(), gens.end());
    out.elems = std::move(rec);
    std::sort(out.elems.begin(), out.elems.end());
    return out;
}

Submodule cyclic_submodule(const FiniteModule& M, Elem m) {
    return submodule_generated(M, std::vector<Elem>{m});
}

Submodule submodule_sum(const FiniteModule& M, const Submodule& N, const Submodule& K) {
    std::vector<Elem> gens = N.gens.empty() ? N.elems : N.gens;
    const auto& kg = K.gens.empty() ? K.elems : K.gens;
    gens.insert(gens.end(), kg.begin(), kg.end());
    return submodule_generated(M, gens);
}

Submodule submodule_intersect(const Submodule& N, const Submodule& K) {
    Submodule out;
    std::set_intersection(N.elems.begin(), N.elems.end(), K.elems.begin(), K.elems.end(),
                          std::back_inserter(out.elems));
    out.gens = out.elems;
    return out;
}

std::vector<Submodule> all_submodules(const FiniteModule& M, const Limits& limits) {
    std::vector<Submodule> cyclics;
    std::set<std::vector<Elem>> seen_cyclic;
    for (long m = 0; m < M.size(); ++m) {
        auto C = cyclic_submodule(M, static_cast<Elem>(m));
        if (seen_cyclic.insert(C.elems).second) cyclics.push_back(std::move(C));
    }
    std::vector<Submodule> out;
    std::set<std::vector<Elem>> seen;
    out.push_back(submodule_generated(M, std::vector<Elem>{}));
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
            auto J = submodule_generated(M, gens);
            if (seen.insert(J.elems).second) {
                out.push_back(std::move(J));
                if (static_cast<long>(out.size()) > limits.max_submodules)
                    throw ResourceLimitError("submodule lattice exceeds cap");
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return out;
}

// ---------------------------------------------------------------------------

ModuleFromTable module_from_table(const RingPtr& R, int n, const std::function<int(int, int)>& add,
                                  const std::function<int(int, Elem)>& act, int zero, const Limits& limits) {
    auto basis = decompose_abelian(n, add, zero);
    const size_t t = basis.gens.size();
    const size_t k = static_cast<size_t>(R->gen_count());
    std::vector<std::vector<std::vector<long>>> action(k, std::vector<std::vector<long>>(t));
    for (size_t i = 0; i < k; ++i)
        for (size_t p = 0; p < t; ++p)
            action[i][p] = basis.coords[static_cast<size_t>(act(basis.gens[p], R->basis_elem(static_cast<int>(i))))];
    ModuleFromTable out;
    out.module = FiniteModule::from_action(R, basis.orders, std::move(action), limits);
    out.to_module.resize(static_cast<size_t>(n));
    out.from_module.assign(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        Elem e = out.module->encode(basis.coords[static_cast<size_t>(x)]);
        out.to_module[static_cast<size_t>(x)] = e;
        out.from_module[e] = x;
    }
    return out;
}

ModuleFromTable submodule_as_module(const FiniteModule& M, const Submodule& N, const Limits& limits) {
    const auto& set = N.elems;
    std::vector<int> idx(static_cast<size_t>(M.size()), -1);
    for (size_t i = 0; i < set.size(); ++i) idx[set[i]] = static_cast<int>(i);
    auto add = [&](int i, int j) {
        return idx[M.add(set[static_cast<size_t>(i)], set[static_cast<size_t>(j)])];
    };
    auto act = [&](int i, Elem a) { return idx[M.act(set[static_cast<size_t>(i)], a)]; };
    // validate closure up front so the table functions cannot return -1
    for (Elem x : set) {
        for (Elem y : set)
            if (idx[M.add(x, y)] < 0) throw InvalidParameterError("set is not closed under addition");
        for (int i = 0; i < M.ring()->gen_count(); ++i)
            if (idx[M.act_basis(x, i)] < 0) throw InvalidParameterError("set is not closed under the action");
    }
    return module_from_table(M.ring(), static_cast<int>(set.size()), add, act, idx[M.zero()], limits);
}

QuotientModule quotient(const FiniteModule& M, const Submodule& N, const Limits& limits) {
    for (Elem x : N.elems) {
        for (Elem y : N.elems)
            if (!N.contains(M.add(x, y))) throw InvalidParameterError("quotient needs a submodule");
        for (int i = 0; i < M.ring()->gen_count(); ++i)
            if (!N.contains(M.act_basis(x, i))) throw InvalidParameterError("quotient needs a submodule");
    }
    std::vector<Elem> rep(static_cast<size_t>(M.size()));
    for (long m = 0; m < M.size(); ++m) {
        Elem best = static_cast<Elem>(m);
        for (Elem x : N.elems) best = std::min(best, M.add(static_cast<Elem>(m), x));
        rep[static_cast<size_t>(m)] = best;
    }
    std::vector<Elem> reps;
    std::vector<int> qindex(static_cast<size_t>(M.size()), -1);
    for (long m = 0; m < M.size(); ++m)
        if (rep[static_cast<size_t>(m)] == static_cast<Elem>(m)) {
            qindex[static_cast<size_t>(m)] = static_cast<int>(reps.size());
            reps.push_back(static_cast<Elem>(m));
        }
    auto qadd = [&](int i, int j) {
        return qindex[rep[M.add(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)])]];
    };
    auto qact = [&](int i, Elem a) { return qindex[rep[M.act(reps[static_cast<size_t>(i)], a)]]; };
    auto built = module_from_table(M.ring(), static_cast<int>(reps.size()), qadd, qact,
                                   qindex[rep[M.zero()]], limits);
    QuotientModule out;
    out.module = built.module;
    out.to_quotient.resize(static_cast<size_t>(M.size()));
    for (long m = 0; m < M.size(); ++m)
        out.to_quotient[static_cast<size_t>(m)] =
            built.to_module[static_cast<size_t>(qindex[rep[static_cast<size_t>(m)]])];
    out.reps.resize(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) out.reps[built.to_module[i]] = reps[i];
    return out;
}

ModulePtr cyclic_quotient(const RingPtr& R, std::span<const Elem> ideal, const Limits& limits) {
    auto reg = FiniteModule::regular(R, limits);
    Submodule N;
    N.elems.assign(ideal.begin(), ideal.end());
    std::sort(N.elems.begin(), N.elems.end());
    N.gens = N.elems;
    return quotient(*reg, N, limits).module;
}

SummandResult is_direct_summand(const FiniteModule& M, const Submodule& N, const Limits& limits) {
    auto lattice = all_submodules(M, limits);
    SummandResult out;
    for (auto& K : lattice) {
        if (static_cast<long>(N.elems.size() * K.elems.size()) != M.size()) continue;
        auto I = submodule_intersect(N, K);
        if (I.elems.size() == 1) {
            out.value = true;
            out.complement = std::move(K);
            return out;
        }
    }
    return out;
}

RdPureResult is_rd_pure(const FiniteModule& M, const Submodule& N) {
    if (!M.ring()->commutative()) throw NotCommutativeError("RD-purity is defined here for commutative rings");
    RdPureResult out;
    std::vector<char> inN(static_cast<size_t>(M.size()), 0);
    for (Elem x : N.elems) inN[x] = 1;
    for (long a = 0; a < M.ring()->size(); ++a) {
        std::vector<char> na(static_cast<size_t>(M.size()), 0);
        for (Elem x : N.elems) na[M.act(x, static_cast<Elem>(a))] = 1;
        // Ma cap N
        std::vector<char> man(static_cast<size_t>(M.size()), 0);
        for (long m = 0; m < M.size(); ++m) {
            Elem y = M.act(static_cast<Elem>(m), static_cast<Elem>(a));
            if (inN[y]) man[y] = 1;
        }
        if (na != man) {
            out.witness = static_cast<Elem>(a);
            return out;
        }
    }
    out.value = true;
    return out;
}

std::vector<LocalComponent> localize(const FiniteModule& M, const LocalDecomposition& dec,
                                     const Limits& limits) {
    if (!M.ring()->commutative()) throw NotCommutativeError("localization requires a commutative ring");
    std::vector<LocalComponent> out;
    for (const auto& f : dec.factors) {
        // the idempotent is the unit of its factor
        Elem e = f.to_parent[f.ring->one()];
        std::vector<Elem> set;
        std::vector<int> idx(static_cast<size_t>(M.size()), -1);
        for (long m = 0; m < M.size(); ++m) {
            Elem y = M.act(static_cast<Elem>(m), e);
            if (idx[y] < 0) {
                idx[y] = 0;
                set.push_back(y);
            }
        }
        std::sort(set.begin(), set.end());
        std::fill(idx.begin(), idx.end(), -1);
        for (size_t i = 0; i < set.size(); ++i) idx[set[i]] = static_cast<int>(i);
        auto add = [&](int i, int j) {
            return idx[M.add(set[static_cast<size_t>(i)], set[static_cast<size_t>(j)])];
        };
        auto act = [&](int i, Elem a) { return idx[M.act(set[static_cast<size_t>(i)], f.to_parent[a])]; };
        auto built = module_from_table(f.ring, static_cast<int>(set.size()), add, act, idx[M.zero()], limits);
        LocalComponent comp;
        comp.factor_ring = f.ring;
        comp.module = built.module;
        comp.to_parent.resize(set.size());
        for (size_t i = 0; i < set.size(); ++i) comp.to_parent[built.to_module[i]] = set[i];
        out.push_back(std::move(comp));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {
std::vector<long> primary_factors(const std::vector<long>& orders) {
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

// {a in R : m*a = 0} compared pointwise
bool same_annihilator(const FiniteModule& A, Elem u, const FiniteModule& B, Elem v) {
    const FiniteRing& R = *A.ring();
    for (long a = 0; a < R.size(); ++a)
        if ((A.act(u, static_cast<Elem>(a)) == A.zero()) != (B.act(v, static_cast<Elem>(a)) == B.zero()))
            return false;
    return true;
}
}  // namespace

IsoResult is_isomorphic(const FiniteModule& A, const FiniteModule& B, const Limits& limits) {
    if (A.ring() != B.ring() && !A.ring()->same_presentation(*B.ring()))
        throw RingMismatchError("isomorphism test needs modules over the same ring");
    IsoResult out;
    if (A.size() != B.size()) return out;
    const FiniteRing& R = *A.ring();

    auto basA = decompose_abelian(static_cast<int>(A.size()),
                                  [&](int x, int y) { return static_cast<int>(A.add(static_cast<Elem>(x), static_cast<Elem>(y))); },
                                  static_cast<int>(A.zero()));
    auto basB = decompose_abelian(static_cast<int>(B.size()),
                                  [&](int x, int y) { return static_cast<int>(B.add(static_cast<Elem>(x), static_cast<Elem>(y))); },
                                  static_cast<int>(B.zero()));
    if (basA.orders != basB.orders) return out;
    if (primary_factors(basA.orders) != primary_factors(basB.orders)) return out;

    // per-scalar kernel sizes must match (the scalar maps are additive homs,
    // so matching kernels force matching images)
    const bool full_scan = static_cast<long long>(R.size()) * A.size() <= (1LL << 22);
    for (long a = 0; a < R.size(); ++a) {
        if (!full_scan && a >= R.gen_count()) break;
        Elem s = full_scan ? static_cast<Elem>(a) : R.basis_elem(static_cast<int>(a));
        long ka = 0, kb = 0;
        for (long m = 0; m < A.size(); ++m) {
            if (A.act(static_cast<Elem>(m), s) == A.zero()) ++ka;
            if (B.act(static_cast<Elem>(m), s) == B.zero()) ++kb;
        }
        if (ka != kb) return out;
    }

    const int t = static_cast<int>(basA.gens.size());
    std::vector<Elem> gensA(static_cast<size_t>(t));
    for (int p = 0; p < t; ++p) gensA[static_cast<size_t>(p)] = static_cast<Elem>(basA.gens[static_cast<size_t>(p)]);

    std::vector<std::vector<Elem>> cands(static_cast<size_t>(t));
    for (int p = 0; p < t; ++p) {
        long d = basA.orders[static_cast<size_t>(p)];
        for (long v = 0; v < B.size(); ++v)
            if (B.additive_order(static_cast<Elem>(v)) == d &&
                same_annihilator(A, gensA[static_cast<size_t>(p)], B, static_cast<Elem>(v)))
                cands[static_cast<size_t>(p)].push_back(static_cast<Elem>(v));
        if (cands[static_cast<size_t>(p)].empty()) return out;
    }

    // R-linearity constraints g_p * b_i = sum_q c_q g_q, deferred until every
    // involved generator image is assigned
    struct Constraint {
        int p, i;
        std::vector<long> coeffs;
    };
    std::vector<std::vector<Constraint>> at_stage(static_cast<size_t>(t));
    for (int p = 0; p < t; ++p)
        for (int i = 0; i < R.gen_count(); ++i) {
            auto c = basA.coords[static_cast<size_t>(A.act_basis(gensA[static_cast<size_t>(p)], i))];
            int stage = p;
            for (int q = 0; q < t; ++q)
                if (c[static_cast<size_t>(q)] != 0) stage = std::max(stage, q);
            at_stage[static_cast<size_t>(stage)].push_back({p, i, std::move(c)});
        }

    std::vector<Elem> img(static_cast<size_t>(t), 0);
    std::vector<char> used(static_cast<size_t>(B.size()), 0);
    std::vector<std::vector<Elem>> combos(static_cast<size_t>(t) + 1);
    combos[0] = {B.zero()};
    used[B.zero()] = 1;
    long long nodes = 0;

    std::function<bool(int)> dfs = [&](int p) -> bool {
        if (p == t) return true;
        long d = basA.orders[static_cast<size_t>(p)];
        for (Elem v : cands[static_cast<size_t>(p)]) {
            if (++nodes > limits.iso_node_budget)
                throw ResourceLimitError("module isomorphism search budget exceeded");
            std::vector<Elem> added;
            bool ok = true;
            for (Elem base : combos[static_cast<size_t>(p)]) {
                Elem cur = base;
                for (long c = 1; c < d && ok; ++c) {
                    cur = B.add(cur, v);
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
                img[static_cast<size_t>(p)] = v;
                auto phi_of = [&](const std::vector<long>& c) {
                    Elem w = B.zero();
                    for (int q = 0; q <= p; ++q)
                        w = B.add(w, B.smul(c[static_cast<size_t>(q)], img[static_cast<size_t>(q)]));
                    return w;
                };
                for (const auto& con : at_stage[static_cast<size_t>(p)])
                    if (phi_of(con.coeffs) != B.act_basis(img[static_cast<size_t>(con.p)], con.i)) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                combos[static_cast<size_t>(p) + 1] = combos[static_cast<size_t>(p)];
                combos[static_cast<size_t>(p) + 1].insert(combos[static_cast<size_t>(p) + 1].end(),
                                                          added.begin(), added.end());
                if (dfs(p + 1)) return true;
            }
            for (Elem x : added) used[x] = 0;
        }
        return false;
    };

    if (t == 0 || dfs(0)) {
        out.value = true;
        out.map.resize(static_cast<size_t>(A.size()));
        for (long m = 0; m < A.size(); ++m) {
            Elem w = B.zero();
            const auto& c = basA.coords[static_cast<size_t>(m)];
            for (int q = 0; q < t; ++q)
                w = B.add(w, B.smul(c[static_cast<size_t>(q)], img[static_cast<size_t>(q)]));
            out.map[static_cast<size_t>(m)] = w;
        }
    }
    return out;
}

}  // namespace modreg
