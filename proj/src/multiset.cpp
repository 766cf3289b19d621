#include "hiergame/multiset.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hiergame {

std::uint64_t enumeration_cap()
{
    if (const char* env = std::getenv("HIERGAME_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultEnumerationCap;
}

int Coalition::size() const
{
    return std::accumulate(counts.begin(), counts.end(), 0);
}

bool is_submultiset(const Coalition& a, const Coalition& b)
{
    if (a.levels() != b.levels()) {
        throw std::invalid_argument("coalition dimension mismatch");
    }
    for (std::size_t i = 0; i < a.levels(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Coalition& c)
{
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < c.levels(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        if (!first) {
            os << ',';
        }
        first = false;
        os << (i + 1) << '^' << c[i];
    }
    return os << '}';
}

// ---------------------------------------------------------------------------

Multiset::Multiset(std::vector<int> counts) : counts_(std::move(counts))
{
    if (counts_.empty()) {
        throw std::invalid_argument("multiset needs at least one level");
    }
    for (int n : counts_) {
        if (n < 1) {
            throw std::invalid_argument("multiset level multiplicities must be positive");
        }
    }
}

int Multiset::total() const
{
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::uint64_t Multiset::lattice_size() const
{
    std::uint64_t size = 1;
    for (int n : counts_) {
        auto f = static_cast<std::uint64_t>(n) + 1;
        if (size > std::numeric_limits<std::uint64_t>::max() / f) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        size *= f;
    }
    return size;
}

bool Multiset::contains(const Coalition& c) const
{
    if (c.levels() != levels()) {
        return false;
    }
    for (std::size_t i = 0; i < levels(); ++i) {
        if (c[i] < 0 || c[i] > counts_[i]) {
            return false;
        }
    }
    return true;
}

Coalition Multiset::complement(const Coalition& c) const
{
    if (!contains(c)) {
        throw std::invalid_argument("coalition is not a submultiset of the universe");
    }
    Coalition out(counts_);
    for (std::size_t i = 0; i < levels(); ++i) {
        out.counts[i] -= c[i];
    }
    return out;
}

// ---------------------------------------------------------------------------

CoalitionLattice::CoalitionLattice(const Multiset& universe) : universe_(universe)
{
    std::uint64_t total = universe.lattice_size();
    std::uint64_t cap = enumeration_cap();
    if (total > cap) {
        std::ostringstream msg;
        msg << "coalition lattice of size " << total << " exceeds enumeration cap " << cap;
        throw CapExceeded(msg.str());
    }
    strides_.resize(universe.levels());
    std::size_t stride = 1;
    for (std::size_t i = 0; i < universe.levels(); ++i) {
        strides_[i] = stride;
        stride *= static_cast<std::size_t>(universe.count(i)) + 1;
    }
    size_ = stride;
}

std::size_t CoalitionLattice::index(const Coalition& c) const
{
    if (!universe_.contains(c)) {
        throw std::invalid_argument("coalition does not fit the universe");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.levels(); ++i) {
        idx += strides_[i] * static_cast<std::size_t>(c[i]);
    }
    return idx;
}

Coalition CoalitionLattice::coalition(std::size_t index) const
{
    Coalition c(std::vector<int>(universe_.levels(), 0));
    for (std::size_t i = 0; i < universe_.levels(); ++i) {
        auto radix = static_cast<std::size_t>(universe_.count(i)) + 1;
        c.counts[i] = static_cast<int>(index % radix);
        index /= radix;
    }
    return c;
}

void CoalitionLattice::for_each(
    const std::function<void(const Coalition&, std::size_t)>& fn) const
{
    Coalition c = universe_.empty();
    for (std::size_t idx = 0; idx < size_; ++idx) {
        fn(c, idx);
        for (std::size_t i = 0; i < c.levels(); ++i) {
            if (c.counts[i] < universe_.count(i)) {
                ++c.counts[i];
                break;
            }
            c.counts[i] = 0;
        }
    }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Coalition> minimal_from_table(const CoalitionLattice& lattice,
                                          const std::vector<bool>& table)
{
    std::vector<Coalition> out;
    lattice.for_each([&](const Coalition& c, std::size_t idx) {
        if (!table[idx]) {
            return;
        }
        for (std::size_t i = 0; i < c.levels(); ++i) {
            if (c[i] > 0 && table[idx - lattice.stride(i)]) {
                return;
            }
        }
        out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ExplicitGame::ExplicitGame(Multiset universe, std::vector<Coalition> min_winning)
    : universe_(std::move(universe)), lattice_(universe_)
{
    std::vector<bool> seeds(lattice_.size(), false);
    for (const auto& c : min_winning) {
        seeds[lattice_.index(c)] = true;
    }
    winning_.assign(lattice_.size(), false);
    lattice_.for_each([&](const Coalition& c, std::size_t idx) {
        bool w = seeds[idx];
        for (std::size_t i = 0; !w && i < c.levels(); ++i) {
            w = c[i] > 0 && winning_[idx - lattice_.stride(i)];
        }
        winning_[idx] = w;
    });
    min_winning_ = minimal_from_table(lattice_, winning_);
}

ExplicitGame::ExplicitGame(Multiset universe, CoalitionLattice lattice, std::vector<bool> table)
    : universe_(std::move(universe)), lattice_(std::move(lattice)), winning_(std::move(table))
{
    min_winning_ = minimal_from_table(lattice_, winning_);
}

ExplicitGame ExplicitGame::from_predicate(const Multiset& universe,
                                          const std::function<bool(const Coalition&)>& pred)
{
    CoalitionLattice lattice(universe);
    std::vector<bool> table(lattice.size(), false);
    lattice.for_each([&](const Coalition& c, std::size_t idx) { table[idx] = pred(c); });
    lattice.for_each([&](const Coalition& c, std::size_t idx) {
        if (!table[idx]) {
            return;
        }
        for (std::size_t i = 0; i < c.levels(); ++i) {
            if (c[i] < universe.count(i) && !table[idx + lattice.stride(i)]) {
                throw std::invalid_argument("winning predicate is not monotone");
            }
        }
    });
    return ExplicitGame(universe, std::move(lattice), std::move(table));
}

bool ExplicitGame::is_winning(const Coalition& x) const
{
    if (x.levels() != universe_.levels()) {
        throw std::invalid_argument("coalition dimension does not match the universe");
    }
    return winning_[lattice_.index(x)];
}

bool is_winning(const ExplicitGame& game, const Coalition& x)
{
    return game.is_winning(x);
}

std::vector<Coalition> maximal_losing(const ExplicitGame& game)
{
    const auto& lat = game.lattice();
    const auto& u = game.universe();
    std::vector<Coalition> out;
    lat.for_each([&](const Coalition& c, std::size_t idx) {
        if (game.winning_at(idx)) {
            return;
        }
        for (std::size_t i = 0; i < c.levels(); ++i) {
            if (c[i] < u.count(i) && !game.winning_at(idx + lat.stride(i))) {
                return;
            }
        }
        out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(LevelRelation r)
{
    switch (r) {
    case LevelRelation::equivalent: return "equivalent";
    case LevelRelation::strictly_above: return "strictly-above";
    case LevelRelation::strictly_below: return "strictly-below";
    case LevelRelation::incomparable: return "incomparable";
    }
    return "?";
}

LevelRelation level_relation(const ExplicitGame& game, std::size_t i, std::size_t j)
{
    const auto& u = game.universe();
    if (i == j || i >= u.levels() || j >= u.levels()) {
        throw std::invalid_argument("level_relation needs two distinct valid levels");
    }
    const auto& lat = game.lattice();
    bool i_geq_j = true;  // X+j wins => X+i wins
    bool j_geq_i = true;
    lat.for_each([&](const Coalition& c, std::size_t idx) {
        if (c[i] >= u.count(i) || c[j] >= u.count(j)) {
            return;
        }
        bool with_i = game.winning_at(idx + lat.stride(i));
        bool with_j = game.winning_at(idx + lat.stride(j));
        if (with_j && !with_i) {
            i_geq_j = false;
        }
        if (with_i && !with_j) {
            j_geq_i = false;
        }
    });
    if (i_geq_j && j_geq_i) {
        return LevelRelation::equivalent;
    }
    if (i_geq_j) {
        return LevelRelation::strictly_above;
    }
    if (j_geq_i) {
        return LevelRelation::strictly_below;
    }
    return LevelRelation::incomparable;
}

bool is_complete(const ExplicitGame& game)
{
    for (std::size_t i = 0; i < game.levels(); ++i) {
        for (std::size_t j = i + 1; j < game.levels(); ++j) {
            if (level_relation(game, i, j) == LevelRelation::incomparable) {
                return false;
            }
        }
    }
    return true;
}

SpecialPlayers special_players(const ExplicitGame& game)
{
    const auto& u = game.universe();
    SpecialPlayers sp;
    for (std::size_t i = 0; i < u.levels(); ++i) {
        bool appears = std::any_of(game.min_winning().begin(), game.min_winning().end(),
                                   [i](const Coalition& c) { return c[i] > 0; });
        if (!appears) {
            sp.dummies.push_back(i);
        }
        Coalition single = u.empty();
        single.counts[i] = 1;
        if (game.is_winning(single)) {
            sp.passers.push_back(i);
        }
        Coalition without_one = u.full();
        without_one.counts[i] -= 1;
        if (!game.is_winning(without_one)) {
            sp.blockers.push_back(i);
        }
    }
    return sp;
}

CompressedGame compress(const ExplicitGame& game)
{
    const std::size_t m = game.levels();
    std::vector<std::size_t> level_map(m, m);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < m; ++i) {
        if (level_map[i] != m) {
            continue;
        }
        level_map[i] = classes.size();
        classes.push_back({i});
        for (std::size_t j = i + 1; j < m; ++j) {
            if (level_map[j] == m && level_relation(game, i, j) == LevelRelation::equivalent) {
                level_map[j] = classes.size() - 1;
                classes.back().push_back(j);
            }
        }
    }
    if (classes.size() == m) {
        return {game, level_map};
    }
    std::vector<int> counts;
    for (const auto& cls : classes) {
        int n = 0;
        for (auto l : cls) {
            n += game.universe().count(l);
        }
        counts.push_back(n);
    }
    Multiset merged(counts);
    auto spread = [&](const Coalition& x) {
        Coalition y = game.universe().empty();
        for (std::size_t c = 0; c < classes.size(); ++c) {
            int left = x[c];
            for (auto l : classes[c]) {
                int take = std::min(left, game.universe().count(l));
                y.counts[l] = take;
                left -= take;
            }
        }
        return y;
    };
    auto merged_game = ExplicitGame::from_predicate(
        merged, [&](const Coalition& x) { return game.is_winning(spread(x)); });
    return {std::move(merged_game), level_map};
}

void for_each_monotone_game(const Multiset& universe,
                            const std::function<void(const ExplicitGame&)>& fn)
{
    CoalitionLattice lattice(universe);
    std::vector<Coalition> all;
    lattice.for_each([&](const Coalition& c, std::size_t) { all.push_back(c); });

    std::vector<Coalition> chosen;
    std::function<void(std::size_t)> recurse = [&](std::size_t pos) {
        if (pos == all.size()) {
            fn(ExplicitGame(universe, chosen));
            return;
        }
        recurse(pos + 1);
        const auto& c = all[pos];
        bool free = std::none_of(chosen.begin(), chosen.end(), [&](const Coalition& d) {
            return is_submultiset(c, d) || is_submultiset(d, c);
        });
        if (free) {
            chosen.push_back(c);
            recurse(pos + 1);
            chosen.pop_back();
        }
    };
    recurse(0);
}

}  // namespace hiergame
