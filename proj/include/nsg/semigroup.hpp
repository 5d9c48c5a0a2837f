#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

using Int = std::int64_t;

// Whether from_generators accepts the trivial semigroup N_0 = <1>.
// N_0 is representable so that enumeration can start from it, but every
// invariant computation refuses it (RequiresProperSemigroup).
enum class Properness { AllowTrivial, RequireProper };

// Partial orders on the Apery set: u <= u' iff u'-u in S (Plain), with the
// extra condition ord(u) + ord(u'-u) = ord(u') for M.
enum class Relation { Plain, M };

// Apery set of S with respect to the multiplicity, in both orderings.
//   w : ascending,  w[0] = 0
//   v : indexed by residue mod e, v[r] == r (mod e)
//   hat : hat[i] in {1,..,e} with w[i] == v_at(hat[i]); hat[i] = e exactly
//         when w[i] == 0.  Subscript arithmetic on v reduces mod e.
struct AperyTable {
    std::vector<Int> w;
    std::vector<Int> v;
    std::vector<Int> hat;

    Int e() const { return static_cast<Int>(w.size()); }

    Int v_at(Int subscript) const {
        const Int m = e();
        Int r = subscript % m;
        if (r < 0) r += m;
        return v[static_cast<std::size_t>(r)];
    }

    Int hat_of(Int i) const { return hat[static_cast<std::size_t>(i)]; }
};

struct MinMaxApery {
    std::vector<Int> min_set;
    std::vector<Int> max_set;
};

namespace detail {
struct CacheSlot;
void cache_init(CacheSlot& slot, const std::function<std::shared_ptr<const void>()>& make);
const void* cache_get(const CacheSlot& slot);
} // namespace detail

class NumericalSemigroup {
public:
    // Builds <gens>: reduces the input to the minimal generating set, computes
    // the Frobenius number and the gap set.  Non-minimal inputs are reduced
    // silently.  Throws EmptyGenerators, InvalidArgument (values < 1 or above
    // 2^31), NotNumerical (gcd != 1), RequiresProperSemigroup (when `p` is
    // RequireProper and the input generates all of N_0).
    static NumericalSemigroup from_generators(std::span<const Int> gens,
                                              Properness p = Properness::AllowTrivial);
    static NumericalSemigroup from_generators(std::initializer_list<Int> gens,
                                              Properness p = Properness::AllowTrivial);

    // Parses "4,5,7" (whitespace ignored).
    static NumericalSemigroup parse(std::string_view text,
                                    Properness p = Properness::AllowTrivial);

    // Fast path for the enumerator: the caller guarantees that `gens` is the
    // minimal generating set and `member` is the membership table on 0..f.
    static NumericalSemigroup from_minimal_data(std::vector<Int> gens, Int frobenius,
                                                std::vector<std::uint8_t> member_upto_f);

    const std::vector<Int>& generators() const;
    Int multiplicity() const;   // e = a_1
    Int embedding_dim() const;  // nu
    Int frobenius() const;      // f, -1 for N_0
    const std::vector<Int>& gaps() const;
    Int genus() const;          // |gaps|

    bool is_trivial() const { return embedding_dim() == 1; } // S == N_0

    bool contains(Int n) const;

    // m-adic order: the maximum number of generators (with repetition) summing
    // to n; -1 when n is not in S (including all n < 0).
    Int ord(Int n) const;

    // Ap(S;n) = {w in S | w - n not in S}, ascending.  n >= 1.
    std::vector<Int> apery_set(Int n) const;

    // Ap(S;e) with both orderings and the hat bijection.  Cached; the
    // reference stays valid while any copy of this semigroup is alive.
    const AperyTable& apery() const;

    // T = {z not in S | z + u in S for all nonzero u in S}.  Self-checks
    // T == maxAp(S) - a_1 before returning.
    std::vector<Int> t_set() const;

    // Minimal / maximal elements of Ap(S)\{0} under the chosen relation.
    MinMaxApery max_min_apery(Relation rel) const;

    // Elements of S in [0, bound], ascending.
    std::vector<Int> members_upto(Int bound) const;

    // Grows the ord table so that reads up to `bound` hit the fast path, and
    // returns a stable snapshot; `ord_in(snapshot, n)` reads without locking.
    using OrdSnapshot = std::shared_ptr<const std::vector<std::int32_t>>;
    OrdSnapshot ord_snapshot(Int bound) const;
    static Int ord_in(const OrdSnapshot& snap, Int n) {
        if (n < 0 || static_cast<std::size_t>(n) >= snap->size()) return -1;
        return (*snap)[static_cast<std::size_t>(n)];
    }

    void require_proper() const; // throws RequiresProperSemigroup when nu < 2

    bool operator==(const NumericalSemigroup& other) const {
        return generators() == other.generators();
    }

    // Single-initialization cache slots used by the goto/classify modules.
    enum class Slot : int { GotoVec = 0, Report = 1, SlotCount = 2 };
    template <class T, class Make>
    const T& cached(Slot slot, Make&& make) const;

private:
    struct Data;
    explicit NumericalSemigroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}
    detail::CacheSlot& cache_slot(int index) const;
    std::shared_ptr<Data> d_;
};

// Comma-separated generator list, e.g. "4,5,7".
std::string format_generators(const std::vector<Int>& gens);

template <class T, class Make>
const T& NumericalSemigroup::cached(Slot slot, Make&& make) const {
    detail::CacheSlot& entry = cache_slot(static_cast<int>(slot));
    detail::cache_init(entry, [&]() -> std::shared_ptr<const void> {
        return std::make_shared<const T>(make());
    });
    return *static_cast<const T*>(detail::cache_get(entry));
}

} // namespace nsg
