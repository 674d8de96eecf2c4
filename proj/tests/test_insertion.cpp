#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxweight/insertion.hpp"

#include <set>

using namespace maxweight;

namespace {

StrictSeq seq(std::vector<std::vector<int>> rows) {
    StrictSeq s;
    for (auto& r : rows) s.emplace_back(r);
    return s;
}

std::set<std::vector<std::vector<int>>> keyed(const std::vector<StrictSeq>& ts) {
    std::set<std::vector<std::vector<int>>> out;
    for (const auto& t : ts) {
        std::vector<std::vector<int>> k;
        for (const auto& row : t) k.push_back(row.parts);
        out.insert(k);
    }
    return out;
}

std::vector<std::vector<int>> key(const StrictSeq& t) {
    std::vector<std::vector<int>> k;
    for (const auto& row : t) k.push_back(row.parts);
    return k;
}

} // namespace

TEST_CASE("insert_box") {
    StrictSeq t = seq({{7, 5, 4, 2}, {6, 3, 1}});
    StrictSeq got = insert_box(t, 1, 8);
    CHECK(key(got) == std::vector<std::vector<int>>{{8, 7, 5, 4, 2}, {6, 3, 1}});
    CHECK(key(insert_box(seq({{}}), 1, 1)) == std::vector<std::vector<int>>{{1}});
    CHECK_THROWS_AS(insert_box(t, 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(insert_box(t, 1, 7), std::invalid_argument);
}

TEST_CASE("level-2 insertion typing: row 1 lowers the index, row 2 raises it") {
    for (int m = 1; m <= 8; ++m) {
        for (int s = 0; s <= m - 1; ++s) {
            for (const auto& t : enumerate_sB({m - 1, s, 2})) {
                if (s >= 1) {
                    StrictSeq up = insert_box(t, 1, m);
                    CHECK(min_valid_shift(up) == s - 1);
                    CHECK(is_rigid(up, {m, s - 1, 2}));
                }
                StrictSeq down = insert_box(t, 2, m);
                CHECK(min_valid_shift(down) == s + 1);
                CHECK(is_rigid(down, {m, s + 1, 2}));
            }
        }
    }
}

TEST_CASE("rigid jeu de taquin reproduces a hand-traced 13-cell run") {
    StrictSeq tp = seq({{12, 10, 8, 7}, {11, 9, 1}, {6, 5, 4, 3, 2}});
    REQUIRE(min_valid_shift(tp) == 3);
    StrictSeq t = rigid_jdt(tp, 13);
    CHECK(key(t) == std::vector<std::vector<int>>{{13, 12, 10, 7}, {11, 9, 8, 1}, {6, 5, 4, 3, 2}});
    CHECK(min_valid_shift(t) == 2);
    CHECK(key(reverse_rigid_jdt(t)) == key(tp));
}

TEST_CASE("reverse rigid jeu de taquin reproduces a hand-traced 12-cell run") {
    StrictSeq t = seq({{13, 12, 10, 7, 5}, {11, 9, 8, 1}, {6, 4, 3, 2}});
    REQUIRE(min_valid_shift(t) == 1);
    StrictSeq tp = reverse_rigid_jdt(t);
    CHECK(key(tp) == std::vector<std::vector<int>>{{12, 10, 8, 7, 5}, {11, 9, 1}, {6, 4, 3, 2}});
    CHECK(min_valid_shift(tp) == 2);
    CHECK(key(rigid_jdt(tp, 13)) == key(t));
}

TEST_CASE("smallest jeu de taquin run") {
    StrictSeq t = rigid_jdt(seq({{}, {}, {1}}), 2);
    CHECK(key(t) == std::vector<std::vector<int>>{{2}, {1}, {}});
    CHECK(key(reverse_rigid_jdt(t)) == std::vector<std::vector<int>>{{}, {}, {1}});
}

TEST_CASE("jeu de taquin round trips on its whole domain") {
    for (int m = 2; m <= 8; ++m) {
        for (int s = 0; s + 1 <= m - 1; ++s) {
            std::set<std::vector<std::vector<int>>> images;
            for (const auto& tp : enumerate_sB({m - 1, s + 1, 3})) {
                StrictSeq t = rigid_jdt(tp, m);
                CHECK(is_rigid(t, {m, s, 3}));
                CHECK(t[0].part(1) == m);
                // the defining property of jdt images: dropping the new
                // cell does not leave a tableau of the same index
                StrictSeq rest{t[0].from_index(2), t[1], t[2]};
                CHECK(!(is_valid_strict_sequence(rest, s) && min_valid_shift(rest) <= s));
                CHECK(key(reverse_rigid_jdt(t)) == key(tp));
                images.insert(key(t));
            }
            CHECK(images.size() == enumerate_sB({m - 1, s + 1, 3}).size());
        }
    }
}

TEST_CASE("the three-way split realizes the Motzkin recursion") {
    for (int m = 1; m <= 8; ++m) {
        for (int s = 0; s <= m; ++s) {
            auto split = partition_level3(m, s);
            auto whole = keyed(enumerate_sB({m, s, 3}));
            auto a = keyed(split.via_row1), b = keyed(split.via_row3), c = keyed(split.via_jdt);
            CHECK(a.size() == split.via_row1.size());
            CHECK(b.size() == split.via_row3.size());
            CHECK(c.size() == split.via_jdt.size());
            std::set<std::vector<std::vector<int>>> all;
            all.insert(a.begin(), a.end());
            all.insert(b.begin(), b.end());
            all.insert(c.begin(), c.end());
            CHECK(all.size() == a.size() + b.size() + c.size()); // disjoint
            CHECK(all == whole);
            CHECK(BigInt((long long)whole.size()) == motzkin_number(m, s));
        }
    }
    auto split41 = partition_level3(4, 1);
    CHECK(split41.via_row1.size() == 5);
    CHECK(split41.via_row3.size() == 4);
    CHECK(split41.via_jdt.size() == 3);
    for (int m = 1; m <= 6; ++m) {
        auto corner = partition_level3(m, m);
        CHECK(corner.via_row1.empty());
        CHECK(corner.via_row3.size() == 1);
        CHECK(corner.via_jdt.empty());
    }
}

TEST_CASE("the Motzkin recording of the 12-cell example") {
    StrictSeq t = seq({{12, 10, 8, 7}, {11, 9, 1}, {6, 5, 4, 3, 2}});
    CHECK(tableau_to_motzkin(t).to_string() == "UUUUUUDHHDHD");
    CHECK(tableau_to_motzkin(seq({{}, {}, {}})).to_string().empty());
}

TEST_CASE("tableau_to_motzkin bijects each index onto its path set") {
    for (int m = 0; m <= 8; ++m) {
        for (int s = 0; s <= m; ++s) {
            std::set<LatticePath> images;
            auto members = enumerate_sB({m, s, 3});
            for (const auto& t : members) {
                LatticePath p = tableau_to_motzkin(t);
                CHECK(p.length() == m);
                CHECK(p.end_height() == s);
                CHECK(p.is_kind(PathKind::Motzkin));
                images.insert(p);
            }
            CHECK(images.size() == members.size());
            CHECK(BigInt((long long)images.size()) == motzkin_number(m, s));
        }
    }
}

TEST_CASE("the Pascal recording of the 8-cell example") {
    StrictSeq t = seq({{6, 5, 3, 2}, {8, 7, 4, 1}});
    REQUIRE(min_valid_shift(t) == 2);
    CHECK(tableau_to_pascal_path(t).to_string() == "UDDDUUUU");
    CHECK(tableau_to_pascal_path(seq({{1}, {}})).to_string() == "D");
}

TEST_CASE("tableau_to_pascal_path bijects with the endpoint law") {
    for (int m = 0; m <= 10; ++m) {
        for (int s = 0; s <= m; ++s) {
            std::set<LatticePath> images;
            auto members = enumerate_sB({m, s, 2});
            int height = ((m - s) % 2 == 0) ? s : -(s + 1);
            for (const auto& t : members) {
                LatticePath p = tableau_to_pascal_path(t);
                CHECK(p.length() == m);
                CHECK(p.end_height() == height);
                images.insert(p);
            }
            CHECK(images.size() == members.size());
            CHECK(BigInt((long long)images.size()) == pascal_number(m, std::abs(height)));
        }
    }
}

TEST_CASE("the golden split of 1B(3)_4") {
    // five tableaux keep the index through the first row, four climb from
    // index zero through the third, and three arrive by jeu de taquin
    auto split = partition_level3(4, 1);
    CHECK(keyed(split.via_row1) ==
          std::set<std::vector<std::vector<int>>>{{{4, 3, 2}, {}, {1}},
                                                  {{4, 3, 1}, {}, {2}},
                                                  {{4, 3}, {1}, {2}},
                                                  {{4, 2, 1}, {}, {3}},
                                                  {{4, 2}, {1}, {3}}});
    CHECK(keyed(split.via_row3) ==
          std::set<std::vector<std::vector<int>>>{{{3, 2, 1}, {}, {4}},
                                                  {{3, 2}, {1}, {4}},
                                                  {{3, 1}, {2}, {4}},
                                                  {{3}, {2}, {4, 1}}});
    CHECK(keyed(split.via_jdt) ==
          std::set<std::vector<std::vector<int>>>{{{4}, {3}, {2, 1}},
                                                  {{4}, {2}, {3, 1}},
                                                  {{4, 1}, {2}, {3}}});
}

TEST_CASE("the golden members of 0B(3)_3 and 1B(3)_3") {
    std::set<std::vector<std::vector<int>>> b03;
    for (const auto& t : enumerate_sB({3, 0, 3})) b03.insert(key(pad_rows(t, 3)));
    CHECK(b03 == std::set<std::vector<std::vector<int>>>{
                     {{3, 2, 1}, {}, {}}, {{3, 2}, {1}, {}}, {{3, 1}, {2}, {}}, {{3}, {2}, {1}}});
    std::set<std::vector<std::vector<int>>> b13;
    for (const auto& t : enumerate_sB({3, 1, 3})) b13.insert(key(pad_rows(t, 3)));
    CHECK(b13 == std::set<std::vector<std::vector<int>>>{{{2}, {1}, {3}},
                                                         {{3}, {1}, {2}},
                                                         {{2, 1}, {}, {3}},
                                                         {{3, 1}, {}, {2}},
                                                         {{3, 2}, {}, {1}}});
}

TEST_CASE("level-2 insertion sources split ten against five") {
    // the 15 members of 2B(2)_6: ten put the new entry at the second row
    // head, five at the first
    int head_row2 = 0, head_row1 = 0;
    for (const auto& t : enumerate_sB({6, 2, 2})) {
        if (t[1].part(1) == 6)
            ++head_row2;
        else if (t[0].part(1) == 6)
            ++head_row1;
    }
    CHECK(head_row2 == 10);
    CHECK(head_row1 == 5);
}
