#include "nsg/semigroup.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nsg {

namespace detail {

struct CacheSlot {
    std::once_flag once;
    std::shared_ptr<const void> value;
};

} // namespace detail

namespace {

constexpr Int kMaxGenerator = Int{1} << 31;

Int table_limit() {
    static const Int limit = [] {
        if (const char* env = std::getenv("NSG_TABLE_LIMIT")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && v >= 0) {
                return v == 0 ? std::numeric_limits<Int>::max() : static_cast<Int>(v);
            }
        }
        return Int{1} << 24; // default safety valve, entries per table
    }();
    return limit;
}

void check_table_bound(Int bound, const char* what) {
    if (bound > table_limit()) {
        std::ostringstream os;
        os << what << " table would need " << bound
           << " entries, above the limit " << table_limit()
           << " (override with NSG_TABLE_LIMIT, 0 = unlimited)";
        throw TableLimitExceeded(os.str());
    }
}

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

} // namespace

struct NumericalSemigroup::Data {
    std::vector<Int> gens;
    Int e = 0;
    Int nu = 0;
    Int f = -1;
    std::vector<Int> gaps;
    std::vector<std::uint8_t> member_low; // membership on 0..f (empty when f == -1)

    mutable std::mutex ord_mu;
    mutable OrdSnapshot ord_table; // guarded by ord_mu for writes; reads copy under lock

    mutable std::once_flag apery_once;
    mutable std::shared_ptr<const AperyTable> apery;

    mutable std::array<detail::CacheSlot, 2> slots;

    bool member(Int n) const {
        if (n < 0) return false;
        if (n > f) return true;
        return member_low[static_cast<std::size_t>(n)] != 0;
    }
};

namespace detail {

void cache_init(CacheSlot& slot, const std::function<std::shared_ptr<const void>()>& make) {
    std::call_once(slot.once, [&] { slot.value = make(); });
}

const void* cache_get(const CacheSlot& slot) { return slot.value.get(); }

} // namespace detail

detail::CacheSlot& NumericalSemigroup::cache_slot(int index) const {
    return d_->slots[static_cast<std::size_t>(index)];
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> gens,
                                                       Properness p) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()), p);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens_in,
                                                       Properness p) {
    if (gens_in.empty()) throw EmptyGenerators("generator list is empty");
    std::vector<Int> gens(gens_in.begin(), gens_in.end());
    for (Int g : gens) {
        if (g < 1) throw InvalidArgument("generators must be positive");
        if (g > kMaxGenerator) throw InvalidArgument("generator above 2^31");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = 0;
    for (Int a : gens) g = std::gcd(g, a);
    if (g != 1) throw NotNumerical("gcd of generators is not 1");

    auto d = std::make_shared<Data>();

    if (gens.front() == 1) {
        if (p == Properness::RequireProper) {
            throw RequiresProperSemigroup("input generates all of N_0");
        }
        d->gens = {1};
        d->e = 1;
        d->nu = 1;
        d->f = -1;
        return NumericalSemigroup(std::move(d));
    }

    // Membership by forward DP up to the Schur bound (a_1-1)(a_max-1), past
    // which every integer is a member because gcd = 1.
    const Int a1 = gens.front();
    const Int amax = gens.back();
    const Int bound = (a1 - 1) * (amax - 1);
    check_table_bound(bound + 1, "membership");
    std::vector<std::uint8_t> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (Int n = 1; n <= bound; ++n) {
        for (Int a : gens) {
            if (a > n) break;
            if (member[static_cast<std::size_t>(n - a)]) {
                member[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
    }

    Int f = -1;
    for (Int n = bound; n >= 1; --n) {
        if (!member[static_cast<std::size_t>(n)]) {
            f = n;
            break;
        }
    }
    // f == -1 cannot happen here: 1..a1-1 are gaps and a1 >= 2.

    // Keep exactly the minimal generators: a generator is redundant iff it is
    // a sum of two nonzero members.
    std::vector<Int> minimal;
    for (Int a : gens) {
        bool redundant = false;
        for (Int s = a1; s + s <= a; ++s) {
            if (member[static_cast<std::size_t>(s)] &&
                member[static_cast<std::size_t>(a - s)]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(a);
    }

    d->gens = std::move(minimal);
    d->e = d->gens.front();
    d->nu = static_cast<Int>(d->gens.size());
    d->f = f;
    d->member_low.assign(member.begin(), member.begin() + f + 1);
    for (Int n = 1; n <= f; ++n) {
        if (!d->member_low[static_cast<std::size_t>(n)]) d->gaps.push_back(n);
    }
    return NumericalSemigroup(std::move(d));
}

NumericalSemigroup NumericalSemigroup::from_minimal_data(std::vector<Int> gens, Int frobenius,
                                                         std::vector<std::uint8_t> member_upto_f) {
    auto d = std::make_shared<Data>();
    d->gens = std::move(gens);
    d->e = d->gens.front();
    d->nu = static_cast<Int>(d->gens.size());
    d->f = frobenius;
    d->member_low = std::move(member_upto_f);
    for (Int n = 1; n <= d->f; ++n) {
        if (!d->member_low[static_cast<std::size_t>(n)]) d->gaps.push_back(n);
    }
    return NumericalSemigroup(std::move(d));
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text, Properness p) {
    std::vector<Int> gens;
    std::string token;
    auto flush = [&] {
        if (token.empty()) {
            throw InvalidArgument("malformed generator list: empty entry");
        }
        Int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw InvalidArgument("malformed generator list: '" + token + "'");
        }
        gens.push_back(value);
        token.clear();
    };
    bool any = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
        } else {
            token.push_back(c);
        }
        any = true;
    }
    if (!any) throw EmptyGenerators("generator list is empty");
    flush();
    return from_generators(std::span<const Int>(gens.data(), gens.size()), p);
}

const std::vector<Int>& NumericalSemigroup::generators() const { return d_->gens; }
Int NumericalSemigroup::multiplicity() const { return d_->e; }
Int NumericalSemigroup::embedding_dim() const { return d_->nu; }
Int NumericalSemigroup::frobenius() const { return d_->f; }
const std::vector<Int>& NumericalSemigroup::gaps() const { return d_->gaps; }
Int NumericalSemigroup::genus() const { return static_cast<Int>(d_->gaps.size()); }

bool NumericalSemigroup::contains(Int n) const { return d_->member(n); }

void NumericalSemigroup::require_proper() const {
    if (d_->nu < 2) {
        throw RequiresProperSemigroup("operation is undefined for S = N_0");
    }
}

NumericalSemigroup::OrdSnapshot NumericalSemigroup::ord_snapshot(Int bound) const {
    std::scoped_lock lock(d_->ord_mu);
    if (d_->ord_table && static_cast<Int>(d_->ord_table->size()) > bound) {
        return d_->ord_table;
    }
    const Int a1 = d_->e;
    const Int amax = d_->gens.back();
    // Default bound covers every lookup the goto/classify modules perform.
    // Generators are gated at 2^31 but this product can still brush the
    // int64 edge, so saturate through 128-bit arithmetic.
    __int128 deep = (static_cast<__int128>(2) * a1 - 2) * amax + a1 + 1;
    deep = std::max<__int128>(deep, static_cast<__int128>(d_->f) + 2 * a1 + 1);
    deep = std::min<__int128>(deep, std::numeric_limits<Int>::max());
    Int want = std::max(bound + 1, static_cast<Int>(deep));
    if (d_->ord_table) want = std::max(want, 2 * static_cast<Int>(d_->ord_table->size()));
    check_table_bound(want, "ord");

    auto table = std::make_shared<std::vector<std::int32_t>>();
    table->reserve(static_cast<std::size_t>(want));
    Int start = 0;
    if (d_->ord_table) {
        table->assign(d_->ord_table->begin(), d_->ord_table->end());
        start = static_cast<Int>(table->size());
    }
    table->resize(static_cast<std::size_t>(want), -1);
    for (Int n = start; n < want; ++n) {
        if (!d_->member(n)) continue;
        if (n == 0) {
            (*table)[0] = 0;
            continue;
        }
        std::int32_t best = -1;
        for (Int a : d_->gens) {
            if (a > n) break;
            const std::int32_t sub = (*table)[static_cast<std::size_t>(n - a)];
            if (sub >= 0 && sub + 1 > best) best = sub + 1;
        }
        (*table)[static_cast<std::size_t>(n)] = best; // best == -1 cannot happen for members
    }
    d_->ord_table = std::move(table);
    return d_->ord_table;
}

Int NumericalSemigroup::ord(Int n) const {
    if (n < 0 || !d_->member(n)) return -1;
    auto snap = ord_snapshot(n);
    return (*snap)[static_cast<std::size_t>(n)];
}

std::vector<Int> NumericalSemigroup::members_upto(Int bound) const {
    std::vector<Int> out;
    for (Int n = 0; n <= bound; ++n) {
        if (d_->member(n)) out.push_back(n);
    }
    return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
    if (n < 1) throw InvalidArgument("Apery set needs n >= 1");
    std::vector<Int> out;
    for (Int w = 0; w <= d_->f + n; ++w) {
        if (d_->member(w) && !d_->member(w - n)) out.push_back(w);
    }
    return out;
}

const AperyTable& NumericalSemigroup::apery() const {
    std::call_once(d_->apery_once, [&] {
        auto t = std::make_shared<AperyTable>();
        t->w = apery_set(d_->e);
        const Int e = d_->e;
        t->v.assign(static_cast<std::size_t>(e), -1);
        t->hat.assign(static_cast<std::size_t>(e), -1);
        for (std::size_t i = 0; i < t->w.size(); ++i) {
            const Int wi = t->w[i];
            const Int r = wi % e;
            t->v[static_cast<std::size_t>(r)] = wi;
            t->hat[i] = r == 0 ? e : r;
            // Definition check: hat(i) == w_i - (ceil(w_i/a_1)-1) a_1.
            if (t->hat[i] != wi - (ceil_div(wi, e) - 1) * e) {
                throw AssertionFailed("hat map disagrees with its closed form");
            }
        }
        for (Int x : t->v) {
            if (x < 0) throw AssertionFailed("Apery residues are not a full system mod e");
        }
        d_->apery = std::move(t);
    });
    return *d_->apery;
}

std::vector<Int> NumericalSemigroup::t_set() const {
    require_proper();
    std::vector<Int> out;
    for (Int z : d_->gaps) {
        bool pseudo = true;
        // z + u > f is automatic for u > f - z, so only small members matter.
        for (Int u = d_->e; u <= d_->f - z; ++u) {
            if (d_->member(u) && !d_->member(z + u)) {
                pseudo = false;
                break;
            }
        }
        if (pseudo) out.push_back(z);
    }
    // Differential self-check: T must equal maxAp(S) - a_1.
    std::vector<Int> from_max = max_min_apery(Relation::Plain).max_set;
    for (Int& w : from_max) w -= d_->e;
    if (out != from_max) {
        throw AssertionFailed("T does not equal maxAp(S) - a_1");
    }
    return out;
}

MinMaxApery NumericalSemigroup::max_min_apery(Relation rel) const {
    require_proper();
    const AperyTable& ap = apery();
    std::vector<Int> nonzero(ap.w.begin() + 1, ap.w.end());

    auto below = [&](Int u, Int v, Relation r) {
        // u strictly below v in the chosen order
        if (u == v) return false;
        const Int s = v - u;
        if (!d_->member(s)) return false;
        if (r == Relation::Plain) return true;
        return ord(u) + ord(s) == ord(v);
    };
    auto compute = [&](Relation r) {
        MinMaxApery mm;
        for (Int u : nonzero) {
            bool has_lower = false;
            bool has_higher = false;
            for (Int v : nonzero) {
                if (below(v, u, r)) has_lower = true;
                if (below(u, v, r)) has_higher = true;
            }
            if (!has_lower) mm.min_set.push_back(u);
            if (!has_higher) mm.max_set.push_back(u);
        }
        return mm;
    };

    MinMaxApery plain = compute(Relation::Plain);
    std::vector<Int> tail(d_->gens.begin() + 1, d_->gens.end());
    if (plain.min_set != tail) {
        throw AssertionFailed("minAp(S) differs from {a_2,...,a_nu}");
    }
    if (rel == Relation::Plain) return plain;

    MinMaxApery m = compute(Relation::M);
    if (m.min_set != plain.min_set) {
        throw AssertionFailed("minAp_M(S) differs from minAp(S)");
    }
    for (Int w : plain.max_set) {
        if (!std::binary_search(m.max_set.begin(), m.max_set.end(), w)) {
            throw AssertionFailed("maxAp(S) is not contained in maxAp_M(S)");
        }
    }
    return m;
}

std::string format_generators(const std::vector<Int>& gens) {
    std::ostringstream os;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ',';
        os << gens[i];
    }
    return os.str();
}

} // namespace nsg
