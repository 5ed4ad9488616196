#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ruled/records.hpp"

#include <sstream>

using namespace ruled;

TEST_CASE("verdict records use the fixed key order") {
    const RuledSurface s{1, -1};
    const Record r = verdict_record(s, Polarization(s, {3, 5}), {});
    std::vector<std::string> keys;
    for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"g", "e", "a", "b", "verdict", "citation",
                                           "classes", "family_dim", "notes"});
    CHECK(r["verdict"] == "EXISTS");
    CHECK(r["classes"][0] == Record::array({5, 4}));
    CHECK(r["classes"][1] == Record::array({2, 12}));
    CHECK(r["family_dim"].is_null());
}

TEST_CASE("sweep rows, skip reasons, and determinism") {
    SweepSpec spec;
    spec.g = {1, 1};
    spec.e = {-2, 0};
    spec.a = {1, 2};
    spec.b = {1, 4};
    const std::vector<Record> rows = run_sweep(spec);
    REQUIRE(rows.size() == 24);
    int nagata = 0, skipped_va = 0, decided = 0;
    for (const Record& r : rows) {
        if (r["verdict"] == "SKIP" && r["notes"] == "nagata") ++nagata;
        else if (r["verdict"] == "SKIP" && r["notes"] == "not_very_ample") ++skipped_va;
        else ++decided;
    }
    CHECK(nagata == 8);       // e = -2 < -g for every (a, b) cell
    CHECK(skipped_va == 4);   // e = 0, g = 1 needs b >= 3
    CHECK(decided == 12);
    CHECK(to_lines(rows) == to_lines(run_sweep(spec)));
}

TEST_CASE("sweep rows parse back to identical records") {
    SweepSpec spec;
    spec.g = {0, 2};
    spec.e = {-1, 1};
    spec.a = {1, 3};
    spec.b = {2, 4};
    const std::vector<Record> rows = run_sweep(spec);
    std::istringstream lines(to_lines(rows));
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line)) {
        REQUIRE(i < rows.size());
        CHECK(Record::parse(line) == rows[i]);
        CHECK(Record::parse(line).dump() == line);
        ++i;
    }
    CHECK(i == rows.size());
}

TEST_CASE("classes and dual records") {
    const RuledSurface s{2, -2};
    const Polarization h(s, {2, 5});
    const Record c = classes_record(s, h);
    CHECK(c["u_degree"] == 0);
    CHECK(c["high"] == Record::array({3, 5}));
    CHECK(c["low"] == Record::array({1, 14}));
    CHECK(c["genericity_required"] == true);

    const Record d = dual_record(s, h, {3, 5});
    CHECK(d["dual"] == Record::array({1, 14}));
    CHECK(d["involution_ok"] == true);
}

TEST_CASE("rank2 record prefers the sufficient ideal-sheaf construction") {
    const RuledSurface s{1, 0};
    const Record r = rank2_record(s, Polarization(s, {3, 2}, false));
    CHECK(r["construction"] == "ideal_sheaf_extension");
    CHECK(r["sufficient"] == true);
    CHECK(r["threshold"] == "2/3");
    CHECK(r["family_dim"] == 12);
    CHECK(r["c1"] == Record::array({7, 6}));
}

TEST_CASE("rank2 record falls back to the stable construction") {
    // a = 5, g = 5, e = 0, b = 3: threshold max{4, 4, 10/3} = 4 > b,
    // so the ideal-sheaf route is insufficient but the e = 0 route applies.
    const RuledSurface s{5, 0};
    const Record r = rank2_record(s, Polarization(s, {5, 3}, false));
    CHECK(r["construction"] == "stable_extension");
    CHECK(r["sufficient"] == true);
    CHECK(r["threshold"].is_null());
    CHECK(r["z_degree"] == 9);  // (alpha + eps) * b = 3 * 3
}

TEST_CASE("rank2 record reports an insufficient datum when nothing else applies") {
    // e = 0 but b < 3 blocks the stable route; threshold 4/3 > b = 1.
    const RuledSurface s{2, 0};
    const Record r = rank2_record(s, Polarization(s, {3, 1}, false));
    CHECK(r["construction"] == "ideal_sheaf_extension");
    CHECK(r["sufficient"] == false);
}

TEST_CASE("rank2 record rejects inputs outside both constructions") {
    const RuledSurface s{1, 1};
    CHECK_THROWS_AS(rank2_record(s, Polarization(s, {2, -1}, false)), std::domain_error);
    try {
        rank2_record(s, Polarization(s, {2, -1}, false));
    } catch (const std::domain_error& ex) {
        const std::string msg = ex.what();
        CHECK(msg.find("negative") != std::string::npos);
        CHECK(msg.find("e = 0") != std::string::npos);
    }
}

TEST_CASE("oracle records compare brute force against the candidates") {
    const RuledSurface quadric{0, 0};
    const std::vector<Record> rows =
        oracle_records(quadric, Polarization(quadric, {1, 1}), 10);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["class"] == Record::array({0, 1}));
    CHECK(rows[0]["family"] == "low");
    CHECK(rows[1]["class"] == Record::array({1, 0}));
    CHECK(rows[1]["family"] == "high");
    CHECK(rows[2]["found"] == 2);
    CHECK(rows[2]["matches_candidates"] == true);

    const RuledSurface f2{0, 2};
    const std::vector<Record> empty =
        oracle_records(f2, Polarization(f2, {2, 5}), 12);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0]["found"] == 0);
    CHECK(empty[0]["matches_candidates"] == false);  // candidates exist, none is Ulrich

    const RuledSurface f1{0, 1};
    const std::vector<Record> parity =
        oracle_records(f1, Polarization(f1, {2, 3}, false), 10);
    REQUIRE(parity.size() == 1);
    CHECK(parity[0]["candidates"].is_null());
    CHECK(parity[0]["matches_candidates"] == true);  // nothing found, none expected
}

TEST_CASE("strata and theta records") {
    const Record st = strata_record(3, 2, 0, 1, 2);
    CHECK(st["dimension"] == 9);
    CHECK(st["in_closure_of_next"] == false);

    const RuledSurface s{3, -2};
    GenericityFlags bundle;
    bundle.generic_bundle = true;
    const Record th = theta_record(s, 4, bundle);
    CHECK(th["rank"] == 4);
    CHECK(th["degree"] == 12);
    CHECK(th["twist_integral"] == true);
    CHECK(th["twist_degree"] == "-1");
    CHECK(th["target_r1"] == 1);
    CHECK(th["target_degree"] == -1);
    CHECK(th["status"] == "PROPER_GENERIC_BUNDLE");

    const Record rank_one = theta_record(s, 1, {});
    CHECK(rank_one["status"] == "PROPER");
    CHECK(rank_one["target_degree"] == 2);
}

TEST_CASE("verdict table renders aligned rows without trailing blanks") {
    SweepSpec spec;
    spec.g = {1, 1};
    spec.e = {-1, 1};
    spec.a = {1, 2};
    spec.b = {9, 9};
    const std::string table = verdict_table(run_sweep(spec));
    std::istringstream lines(table);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        CHECK_FALSE(line.empty());
        CHECK(line.back() != ' ');
        ++count;
    }
    CHECK(count == 7);  // header + 6 rows
    CHECK(table.compare(0, 1, "g") == 0);
}
