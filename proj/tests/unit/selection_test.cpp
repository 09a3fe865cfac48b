#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "emtedge/errors.hpp"
#include "emtedge/selection/archive.hpp"
#include "emtedge/selection/dominance.hpp"
#include "emtedge/selection/environment.hpp"
#include "emtedge/selection/geometry.hpp"
#include "emtedge/selection/selectors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace emtedge;
using namespace emtedge::selection;

auto row(std::initializer_list<double> v) -> std::vector<double> { return v; }

auto fronts_of(ObjectiveMatrix const& m) -> std::vector<std::size_t> { return front_indices(m); }

// Eight 2-objective points: a dominated point (2) and an exact repeat (4).
auto const kEight = ObjectiveMatrix{{0.0, 1.0}, {0.2, 0.7}, {0.3, 0.75}, {0.5, 0.5},
                                    {0.5, 0.5}, {0.6, 0.3}, {0.9, 0.1}, {1.0, 0.0}};

// Six mutually non-dominated points, hand-traced with three divisions.
auto const kSix = ObjectiveMatrix{{0.0, 10.0}, {1.0, 6.0}, {2.0, 5.0}, {5.0, 2.0}, {6.0, 1.5}, {10.0, 0.0}};

TEST(Dominates, Examples) {
    EXPECT_TRUE(dominates(row({1, 1, 1, 1}), row({2, 2, 2, 2})));
    auto const a = row({1, 2, 3});
    EXPECT_FALSE(dominates(a, a));
    EXPECT_FALSE(dominates(row({1, 3}), row({2, 2})));
    EXPECT_FALSE(dominates(row({2, 2}), row({1, 3})));
    EXPECT_TRUE(dominates(row({1, 2}), row({1, 3})));
}

TEST(Dominates, LengthMismatchIsContractViolation) {
    EXPECT_THROW((void)dominates(row({1, 2}), row({1, 2, 3})), ContractViolation);
}

TEST(Dominates, OrderProperties) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> level(0, 3);
    for (int trial = 0; trial < 5000; ++trial) {
        std::vector<std::vector<double>> v(3, std::vector<double>(3));
        for (auto& x : v) {
            for (auto& e : x) {
                e = level(rng);
            }
        }
        EXPECT_FALSE(dominates(v[0], v[0]));
        EXPECT_FALSE(dominates(v[0], v[1]) && dominates(v[1], v[0]));
        if (dominates(v[0], v[1]) && dominates(v[1], v[2])) {
            EXPECT_TRUE(dominates(v[0], v[2]));
        }
    }
}

TEST(NondominatedFronts, MatchesPeelingOracle) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> level(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t const n = 1 + trial % 15;
        ObjectiveMatrix m(n, 1 + trial % 4);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t k = 0; k < m.cols(); ++k) {
                m(i, k) = level(rng);
            }
        }
        EXPECT_EQ(fronts_of(m), oracle::front_numbers(m));
        auto const fronts = nondominated_fronts(m);
        for (auto const& f : fronts) {
            EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
        }
        EXPECT_EQ(mutually_nondominated(m), fronts.size() <= 1);
    }
}

TEST(Geometry, NormExamples) {
    EXPECT_EQ(norm(row({0, 0, 0, 0})), 0.0);
    EXPECT_EQ(norm(row({3, 4})), 5.0);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto const m = fixture::random_matrix(1, 4, rng);
        double sum = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            sum += m(0, k) * m(0, k);
        }
        EXPECT_NEAR(norm(m.row(0)), std::sqrt(sum), 1e-12);
    }
}

TEST(Geometry, VectorAngleHandValues) {
    EXPECT_NEAR(vector_angle(row({0.3, 0.4}), row({0.3, 0.4})), 0.0, 1e-12);
    EXPECT_NEAR(vector_angle(row({1, 0}), row({0, 1})), std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(vector_angle(row({1, 0}), row({1, 1})), std::numbers::pi / 4, 1e-12);
    EXPECT_EQ(vector_angle(row({0, 0}), row({1, 1})), std::numbers::pi / 2);
}

TEST(Geometry, NormalizeMapsToUnitBox) {
    auto const n = normalize(ObjectiveMatrix{{1, 5, 2}, {3, 5, 4}, {2, 5, 3}});
    EXPECT_EQ(n.values, (ObjectiveMatrix{{0, 0, 0}, {1, 0, 1}, {0.5, 0, 0.5}}));
    EXPECT_EQ(n.mins, (std::vector<double>{1, 5, 2}));
    EXPECT_EQ(n.maxs, (std::vector<double>{3, 5, 4}));
}

TEST(Geometry, SdeExamples) {
    auto const twins = sde_fitness(ObjectiveMatrix{{0.5, 0.5}, {0.5, 0.5}});
    EXPECT_EQ(twins, (std::vector<double>{0.0, 0.0}));
    auto const single = sde_fitness(ObjectiveMatrix{{0.1, 0.2}});
    EXPECT_EQ(single[0], std::numeric_limits<double>::infinity());

    ObjectiveMatrix const four{{0.0, 1.0}, {0.25, 0.5}, {0.5, 0.4}, {1.0, 0.0}};
    auto const got = sde_fitness(four);
    auto const want = oracle::sde(four);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(got[i], want[i], 1e-15);
    }
    // Point 1 shifted against point 2: (0.5 - 0.25, max(0, 0.4 - 0.5)) -> 0.25.
    EXPECT_DOUBLE_EQ(got[1], 0.25);
}

TEST(Geometry, SdeProperties) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = fixture::random_matrix(2 + trial % 8, 3, rng);
        auto const before = sde_fitness(m);
        auto const want = oracle::sde(m);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            EXPECT_NEAR(before[i], want[i], 1e-12);
        }
        // A repeated row has fitness 0; dropping it never lowers another's.
        auto dup = m;
        dup.append(m.row(0));
        auto const with = sde_fitness(dup);
        EXPECT_EQ(with.back(), 0.0);
        EXPECT_EQ(with.front(), 0.0);
        for (std::size_t i = 1; i < m.rows(); ++i) {
            EXPECT_LE(with[i], before[i]);
        }
    }
}

TEST(VectorAngleSelect, WholePoolWhenCountMatches) {
    std::mt19937_64 rng(5);
    auto const m = fixture::random_matrix(6, 4, rng);
    EXPECT_EQ(select_vector_angle(m, 6), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(VectorAngleSelect, ThreeRaysKeepsTheExtremes) {
    ObjectiveMatrix const rays{{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    auto got = select_vector_angle(rays, 2);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::size_t>{0, 2}));
}

TEST(VectorAngleSelect, TooFewIsContractViolation) {
    EXPECT_THROW((void)select_vector_angle(ObjectiveMatrix{{0, 1}}, 2), ContractViolation);
}

TEST(VectorAngleSelect, DuplicatesComeLast) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = fixture::random_front(5, 3, rng);
        m.append(m.row(1));
        m.append(m.row(3));
        auto const got = select_vector_angle(m, 5);
        std::set<std::vector<double>> seen;
        for (auto i : got) {
            seen.insert(std::vector<double>(m.row(i).begin(), m.row(i).end()));
        }
        EXPECT_EQ(seen.size(), 5U);
    }
}

TEST(VectorAngleSelect, InvariantUnderPositiveRescaling) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> scale(0.1, 100.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto const m = fixture::random_matrix(12, 4, rng);
        auto scaled = m;
        for (std::size_t k = 0; k < 4; ++k) {
            double const s = scale(rng);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                scaled(i, k) *= s;
            }
        }
        auto a = select_vector_angle(m, 6);
        auto b = select_vector_angle(scaled, 6);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
    }
}

TEST(TournamentSelect, DominatorWinsEverything) {
    ObjectiveMatrix const pool{{0, 0}, {0.5, 1}, {1, 0.5}, {1, 1}};
    std::mt19937_64 rng(8);
    std::size_t wins = 0;
    auto const draws = 10000;
    auto const got = select_tournament(pool, draws, rng);
    EXPECT_EQ(got.size(), static_cast<std::size_t>(draws));
    for (auto i : got) {
        wins += i == 0;
        EXPECT_LT(i, pool.rows());
    }
    // Row 0 enters a tournament with probability 1 - (3/4)^2.
    EXPECT_NEAR(static_cast<double>(wins) / draws, 1.0 - 0.75 * 0.75, 0.02);
}

TEST(TournamentSelect, FirstFrontWinsMixedPairings) {
    ObjectiveMatrix const pool{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    std::mt19937_64 rng(9);
    auto const got = select_tournament(pool, 10000, rng);
    auto const first = std::count_if(got.begin(), got.end(), [](std::size_t i) { return i < 2; });
    // Front 1 wins unless both contenders come from front 2.
    EXPECT_NEAR(static_cast<double>(first) / 10000.0, 0.75, 0.02);
}

TEST(TournamentSelect, NeedsTwoRows) {
    std::mt19937_64 rng(10);
    EXPECT_THROW((void)select_tournament(ObjectiveMatrix{{0, 1}}, 1, rng), ContractViolation);
}

TEST(GridSelect, HandTracedSixPointGrid) {
    auto const g = build_grid(kSix, 3);
    EXPECT_NEAR(g.lower[0], -5.0 / 3.0, 1e-12);
    EXPECT_NEAR(g.width[0], 40.0 / 9.0, 1e-12);
    std::vector<std::vector<int>> const coords{{0, 2}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {2, 0}};
    EXPECT_EQ(g.coords, coords);
    EXPECT_EQ(g.rank, (std::vector<double>{2, 1, 1, 1, 1, 2}));
    EXPECT_EQ(g.crowding, (std::vector<double>{2, 3, 3, 3, 3, 2}));
    std::vector<double> const gcpd{std::hypot(0.375, 0.625), std::hypot(0.6, 0.725),  std::hypot(0.825, 0.5),
                                   std::hypot(0.5, 0.825),   std::hypot(0.725, 0.7125), std::hypot(0.625, 0.375)};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR(g.point_distance[i], gcpd[i], 1e-12) << i;
    }
}

TEST(GridSelect, HandTracedSixPointOrder) {
    // Pick 1: GR 1 tie (1,2,3,4), GCPD picks 1; twin 2 gets +4, dominated 0 gets +2.
    // Pick 2: GR 1 tie (3,4), GCPD picks 3; twin 4 +4, dominated 5 +2.
    // Pick 3: GR 4 tie (0,5), GCD 1 tie, GCPD tie, lower index 0; neighbour 2 punished +1.
    // Pick 4: 5 (GR 4); neighbour 4 punished +1.
    // Pick 5: GR 6 tie (2,4), GCD 3 tie, GCPD picks 2.
    EXPECT_EQ(select_grid(kSix, 5, 3), (std::vector<std::size_t>{1, 3, 0, 5, 2}));
    EXPECT_EQ(select_grid(kSix, 3, 3), (std::vector<std::size_t>{1, 3, 0}));
    EXPECT_EQ(select_grid(kSix, 6, 3), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(GridSelect, TwinsYieldOnePick) {
    auto const got = select_grid(ObjectiveMatrix{{0.5, 0.5}, {0.5, 0.5}}, 1);
    EXPECT_EQ(got.size(), 1U);
}

TEST(GridSelect, TwinPenaltyDefersRepeats) {
    ObjectiveMatrix const pool{{0.0, 1.0}, {0.5, 0.5}, {0.5, 0.5}, {1.0, 0.0}};
    auto const got = select_grid(pool, 3);
    auto const repeats = std::count_if(got.begin(), got.end(), [](std::size_t i) { return i == 1 || i == 2; });
    EXPECT_EQ(repeats, 1);
}

TEST(GridSelect, DistinctCellsAllSelected) {
    ObjectiveMatrix const pool{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    EXPECT_EQ(select_grid(pool, 4, 4).size(), 4U);
}

TEST(GridSelect, SingleDivisionFollowsFronts) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto const m = fixture::random_matrix(12, 3, rng);
        auto const g = build_grid(m, 1);
        for (auto const& c : g.coords) {
            EXPECT_EQ(c, (std::vector<int>{0, 0, 0}));
        }
        auto const front = front_indices(m);
        auto const got = select_grid(m, 6, 1);
        std::size_t worst = 0;
        for (auto i : got) {
            worst = std::max(worst, front[i]);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (front[i] < worst) {
                EXPECT_NE(std::find(got.begin(), got.end(), i), got.end());
            }
        }
    }
}

TEST(Selectors, ExactCountOfPoolMembers) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t const n = 4 + trial % 20;
        std::size_t const want = 1 + trial % n;
        auto const m = fixture::random_matrix(n, 4, rng);
        auto const va = select_vector_angle(m, want);
        auto const gr = select_grid(m, want);
        auto const to = select_tournament(m, want, rng);
        for (auto const* pick : {&va, &gr, &to}) {
            EXPECT_EQ(pick->size(), want);
            for (auto i : *pick) {
                EXPECT_LT(i, n);
            }
        }
        EXPECT_EQ(std::set<std::size_t>(va.begin(), va.end()).size(), want);
        EXPECT_EQ(std::set<std::size_t>(gr.begin(), gr.end()).size(), want);
        auto const g = build_grid(m, kDefaultGridDivisions);
        for (auto const& c : g.coords) {
            for (int x : c) {
                EXPECT_GE(x, 0);
                EXPECT_LT(x, static_cast<int>(kDefaultGridDivisions));
            }
        }
    }
}

TEST(ArchiveSurvivors, EveryEightPointSubsetMatchesOracle) {
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < 8; ++i) {
            if (mask & (1U << i)) {
                pick.push_back(i);
            }
        }
        auto const sub = kEight.subset(pick);
        for (std::size_t cap = 1; cap <= 5; ++cap) {
            EXPECT_EQ(archive_survivors(sub, cap), oracle::archive(sub, cap)) << "mask " << mask << " cap " << cap;
        }
    }
}

TEST(ArchiveSurvivors, RandomFrontsMatchOracle) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto const m = fixture::random_front(20, 4, rng);
        auto const got = archive_survivors(m, 10);
        EXPECT_EQ(got.size(), 10U);
        EXPECT_EQ(got, oracle::archive(m, 10));
    }
}

TEST(ArchiveSurvivors, PerObjectiveMinimaSurvive) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        auto const m = fixture::random_front(30, 4, rng);
        auto const got = archive_survivors(m, 6);
        for (std::size_t k = 0; k < 4; ++k) {
            double best = m(0, k);
            double kept = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                best = std::min(best, m(i, k));
            }
            for (auto i : got) {
                kept = std::min(kept, m(i, k));
            }
            EXPECT_EQ(kept, best);
        }
    }
}

auto individual(ObjectiveVector obj, Task task = Task::deployment) -> Individual {
    Individual ind;
    ind.genome = {obj[0], obj[1]};
    ind.objectives = obj;
    ind.skill_factor = task;
    return ind;
}

TEST(ArchiveUpdate, EmptyPlusOne) {
    Archive archive(4);
    std::vector<Individual> const c{individual({1, 2, 3, 4})};
    archive.update(c);
    ASSERT_EQ(archive.size(), 1U);
    EXPECT_EQ(archive.members().front(), c.front());
}

TEST(ArchiveUpdate, DominatedCandidateLeavesArchiveUnchanged) {
    Archive archive(4);
    std::vector<Individual> const first{individual({1, 1, 1, 1}), individual({0, 2, 2, 2})};
    archive.update(first);
    auto const before = archive.members();
    std::vector<Individual> const worse{individual({2, 2, 2, 2})};
    archive.update(worse);
    EXPECT_EQ(archive.members(), before);
}

TEST(ArchiveUpdate, InfeasibleCandidatesAreIgnored) {
    Archive archive(4);
    auto bad = individual({0, 0, 0, 0});
    bad.feasible = false;
    std::vector<Individual> const c{bad};
    archive.update(c);
    EXPECT_TRUE(archive.empty());
}

TEST(ArchiveUpdate, TwiceCapacityTruncatedToCapacity) {
    std::mt19937_64 rng(15);
    std::size_t const n = 8;
    for (int trial = 0; trial < 30; ++trial) {
        Archive archive(n);
        auto const m = fixture::random_front(2 * n, 4, rng);
        std::vector<Individual> c;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            c.push_back(individual({m(i, 0), m(i, 1), m(i, 2), m(i, 3)}));
        }
        archive.update(c);
        ASSERT_EQ(archive.size(), n);
        auto const want = oracle::archive(m, n);
        for (std::size_t p = 0; p < n; ++p) {
            EXPECT_EQ(archive.members()[p], c[want[p]]);
        }
        EXPECT_TRUE(mutually_nondominated(archive.objectives()));
    }
}

TEST(ArchiveUpdate, StaysNondominatedOverManyUpdates) {
    std::mt19937_64 rng(16);
    Archive archive(10);
    for (int round = 0; round < 100; ++round) {
        auto const m = fixture::random_matrix(15, 4, rng);
        std::vector<Individual> c;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            c.push_back(individual({m(i, 0), m(i, 1), m(i, 2), m(i, 3)}));
        }
        archive.update(c);
        EXPECT_LE(archive.size(), 10U);
        EXPECT_TRUE(mutually_nondominated(archive.objectives()));
    }
}

TEST(FrontSdeOrder, MatchesOracle) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> level(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        ObjectiveMatrix m(1 + trial % 12, 4);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t k = 0; k < 4; ++k) {
                m(i, k) = level(rng) + 0.1 * static_cast<double>(i % 3);
            }
        }
        EXPECT_EQ(front_sde_order(m), oracle::front_sde_order(m));
    }
}

TEST(EnvironmentSelection, DegeneratePoolOfCopies) {
    std::size_t const n = 8;
    auto const a = individual({1, 2, 3, 4}, Task::deployment);
    auto const b = individual({4, 3, 2, 1}, Task::offload);
    std::vector<Individual> merged;
    for (std::size_t i = 0; i < n; ++i) {
        merged.push_back(a);
        merged.push_back(b);
    }
    Archives archives{Archive(n), Archive(n)};
    std::vector<Task> const tasks{Task::deployment, Task::offload};
    std::mt19937_64 rng(18);
    auto const next = environment_selection(merged, n, tasks, archives, rng, {});
    ASSERT_EQ(next.size(), n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        EXPECT_EQ(next[i], a);
        EXPECT_EQ(next[n / 2 + i], b);
    }
    EXPECT_EQ(archives[0].size(), 1U);
    EXPECT_EQ(archives[1].size(), 1U);
}

TEST(EnvironmentSelection, QuotaSplitAndElitism) {
    std::mt19937_64 rng(19);
    std::size_t const n = 12;
    Archives archives{Archive(n), Archive(n)};
    std::vector<Task> const tasks{Task::deployment, Task::offload};
    for (int round = 0; round < 30; ++round) {
        std::vector<Individual> merged;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            auto const m = fixture::random_matrix(1, 4, rng);
            merged.push_back(individual({m(0, 0), m(0, 1), m(0, 2), m(0, 3)}, i % 2 ? Task::offload : Task::deployment));
        }
        auto const next = environment_selection(merged, n, tasks, archives, rng, {});
        ASSERT_EQ(next.size(), n);
        for (std::size_t t = 0; t < 2; ++t) {
            std::size_t holders = 0;
            bool has_elite = false;
            for (auto const& ind : next) {
                if (task_index(ind.skill_factor) != t) {
                    continue;
                }
                ++holders;
                for (auto const& e : archives[t].members()) {
                    has_elite = has_elite || e == ind;
                }
            }
            EXPECT_EQ(holders, n / 2);
            EXPECT_TRUE(has_elite);
        }
    }
}

TEST(EnvironmentSelection, EmptyTaskIsRefilled) {
    std::size_t const n = 4;
    std::vector<Individual> merged;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        merged.push_back(individual({double(i), double(8 - i), 1, 1}, Task::deployment));
    }
    Archives archives{Archive(n), Archive(n)};
    std::vector<Task> const tasks{Task::deployment, Task::offload};
    std::mt19937_64 rng(20);
    int calls = 0;
    FreshIndividual fresh = [&](Task t) {
        ++calls;
        return individual({double(calls), 1, 1, 1}, t);
    };
    auto const next = environment_selection(merged, n, tasks, archives, rng, fresh);
    EXPECT_EQ(calls, 2);
    EXPECT_EQ(std::count_if(next.begin(), next.end(), [](auto const& i) { return i.skill_factor == Task::offload; }),
              2);
}

} // namespace
