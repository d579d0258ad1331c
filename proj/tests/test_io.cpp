#include <doctest.h>

#include <set>
#include <string>

#include "cactus5/io.hpp"

using namespace cactus5;

namespace {

FirstCactus chain5() { return make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}}); }

SecondCactus star_b_xyx() {
    return make_second_cactus({{0, 0, 1, Chamber::x}, {1, 0, 2, Chamber::y}, {2, 0, 3, Chamber::x}});
}

bool is_hex(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::string("0123456789abcdef").find(c) == std::string::npos) return false;
    return true;
}

} // namespace

TEST_CASE("atlas serialization") {
    Atlas first = enumerate_first(5, Equivalence::with_rotation);
    ordered_json j = atlas_to_json(first);
    CHECK(j["family"] == "first");
    CHECK(j["degree"] == 5);
    CHECK(j["equivalence"] == "rotated");
    CHECK(j["count"] == 8);
    REQUIRE(j["classes"].size() == 8);

    std::set<std::string> keys, shapes;
    for (int i = 0; i < 8; ++i) {
        const auto& row = j["classes"][static_cast<size_t>(i)];
        CHECK(row["index"] == i);
        CHECK(is_hex(row["key"].get<std::string>()));
        keys.insert(row["key"].get<std::string>());
        shapes.insert(row["shape"].get<std::string>());
        REQUIRE(row["edges"].size() == 4);
        for (const auto& e : row["edges"]) REQUIRE(e.size() == 3);
    }
    CHECK(keys.size() == 8);
    CHECK(shapes.count("star") == 1);

    Atlas second = enumerate_second(Equivalence::fixed_labels);
    ordered_json js = atlas_to_json(second);
    CHECK(js["family"] == "second");
    CHECK(js["equivalence"] == "fixed");
    CHECK(js["count"] == 25);
    for (const auto& row : js["classes"])
        for (const auto& e : row["edges"]) {
            REQUIRE(e.size() == 4);
            if (e[1] == 0) {
                std::string ch = e[3].get<std::string>();
                CHECK((ch == "x" || ch == "y"));
            } else {
                CHECK(e[3].is_null());
            }
        }

    std::string text = atlas_to_text(first);
    CHECK(text.find("first degree 5 (rotated): 8 classes") == 0);
    CHECK(text.find("#7") != std::string::npos);
    CHECK(text.find("star") != std::string::npos);
}

TEST_CASE("classification serialization") {
    Classification cl;
    cl.kind = CaseKind::triangle;
    cl.atlas_index = 4;
    cl.canonical_key = std::string("\x01\x02", 2);
    cl.shape = "star-B(xyx)";
    ordered_json j = classification_to_json(cl);
    CHECK(j["family"] == "second");
    CHECK(j["case"] == "triangle");
    CHECK(j["index"] == 4);
    CHECK(j["key"] == "0102");
    CHECK(j["shape"] == "star-B(xyx)");
}

TEST_CASE("sample table serialization") {
    SampleTable t;
    t.count = 3;
    t.seed = 7;
    t.stable = 2;
    t.by_class["first/0"] = 2;
    t.failures["GenericityError"] = 1;
    ordered_json j = sample_table_to_json(t);
    CHECK(j["count"] == 3);
    CHECK(j["seed"] == 7);
    CHECK(j["stable"] == 2);
    CHECK(j["by_class"]["first/0"] == 2);
    CHECK(j["failures"]["GenericityError"] == 1);
}

TEST_CASE("oracle report serialization") {
    OracleReport r = oracle_report(4);
    ordered_json j = oracle_report_to_json(r);
    CHECK(j["n"] == 4);
    CHECK(j["tuples"] == 16);
    CHECK(j["classes"] == 4);
    CHECK(j["per_class"] == 4);
    CHECK(j["agree"] == true);

    std::string text = oracle_report_to_text(r);
    CHECK(text.find("n=4") == 0);
    CHECK(text.find("consistent") != std::string::npos);
}

TEST_CASE("first-type render formats") {
    FirstCactus c = chain5();
    std::string text = render_first(c, "text");
    CHECK(text ==
          "first, degree 5, chain(0,1,2,3)\n"
          "edges: 0:(0,1)  1:(1,2)  2:(2,3)  3:(3,4)\n"
          "oval 0: [0] 1 2 3\n"
          "oval 1: [0] [1] 2 3\n"
          "oval 2: 0 [1] [2] 3\n"
          "oval 3: 0 1 [2] [3]\n"
          "oval 4: 0 1 2 [3]\n");

    std::string json = render_first(c, "json");
    ordered_json j = ordered_json::parse(json);
    CHECK(j["family"] == "first");
    CHECK(j["degree"] == 5);
    CHECK(j["shape"] == "chain(0,1,2,3)");
    REQUIRE(j["edges"].size() == 4);

    std::string dot = render_first(c, "dot");
    CHECK(dot.find("graph cactus {") == 0);
    CHECK(dot.find("o0 -- o1") != std::string::npos);

    std::string tikz = render_first(c, "tikz");
    CHECK(tikz.find("\\begin{tikzpicture}") == 0);
    CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);

    CHECK(render_first(c, "text") == text); // byte-stable
    CHECK_THROWS_AS(render_first(c, "svg"), Error);
}

TEST_CASE("second-type render formats") {
    SecondCactus c = star_b_xyx();
    std::string text = render_second(c, "text");
    CHECK(text ==
          "second, degree 5, star-B(xyx)\n"
          "edges: 0:(0,1,x)  1:(0,2,y)  2:(0,3,x)\n"
          "oval 0: [0x] 1 [2x] 0 [1y] 2\n"
          "oval 1: [0] 1 2 (3)\n"
          "oval 2: 0 [1] 2 (3)\n"
          "oval 3: 0 1 [2] (3)\n");

    ordered_json j = ordered_json::parse(render_second(c, "json"));
    CHECK(j["family"] == "second");
    CHECK(j["shape"] == "star-B(xyx)");
    REQUIRE(j["edges"].size() == 3);
    CHECK(j["edges"][0][3] == "x");

    std::string dot = render_second(c, "dot");
    CHECK(dot.find("style=bold") != std::string::npos);
    CHECK(dot.find("label=\"0x\"") != std::string::npos);

    std::string tikz = render_second(c, "tikz");
    CHECK(tikz.find("[double]") != std::string::npos);

    CHECK_THROWS_AS(render_second(c, "pdf"), Error);
}
