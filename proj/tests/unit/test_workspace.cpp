#include <doctest.h>

#include <string>

#include "subext/error.hpp"
#include "subext/report.hpp"
#include "subext/workspace.hpp"

using namespace subext;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        parse_workspace(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

std::string message_of(const std::string& text) {
    try {
        parse_workspace(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("workspace parsing") {
    const std::string text = R"(
# comment
ring E2 { family=semigroup p=2 gens=[2,3] }
ring A2 { family=artin p=3 vars=[x,y] ideal=["x^2","x*y","y^2"] }
ring D { family=dvr p=5 }
module M { ring=E2 kind=frac_ideal gens=["t^2","t^3"] }
module Q { ring=E2 kind=quotient gens=["t^2"] }   # R/t^2
module K { ring=A2 kind=residue_field }
module S { ring=E2 kind=direct_sum of=[M,Q] }
module F { ring=D kind=free rank=2 }
module W { ring=E2 kind=canonical }
ideal I { ring=E2 gens=["t^4","t^5"] }
)";
    Workspace ws = parse_workspace(text);
    CHECK(ws.ring_order == std::vector<std::string>{"E2", "A2", "D"});
    CHECK(ws.module_order.size() == 6);
    CHECK(ws.ring("A2")->p() == 3);
    CHECK(ws.ring("A2")->basis_size() == 3);
    CHECK(ws.ring("E2")->semigroup_gens() == std::vector<int>{2, 3});
    CHECK(ws.ring("D")->family() == Family::Dvr);
    CHECK(mu(*ws.module("M")) == 2);
    CHECK(length(*ws.module("Q")) == 2);
    CHECK(length(*ws.module("K")) == 1);
    CHECK(mu(*ws.module("S")) == 3);
    CHECK(mu(*ws.module("F")) == 2);
    CHECK(is_isomorphic(ws.module("W"), free_module(ws.ring("E2"), 1)));
    CHECK(quotient_length(ws.ideal("I")) == 3);
    CHECK(ws.modules_over("E2") == std::vector<std::string>{"M", "Q", "S", "W"});
    CHECK(ws.modules.at("S").kind == "direct_sum");
    CHECK_THROWS_AS(ws.module("nope"), Error);
}

TEST_CASE("workspace errors") {
    CHECK(code_of("ring E { family=semigroup p=2 gens=[2,4] }") == ErrorCode::BadSemigroup);
    CHECK(code_of("ring E { family=semigroup p=4 gens=[2,3] }") != ErrorCode::Internal);
    CHECK(code_of("ring E { family=dvr p=2 }\nring E { family=dvr p=3 }") == ErrorCode::ParseError);
    CHECK(code_of("ring E { family=dvr p=2 colour=red }") == ErrorCode::ParseError);
    CHECK(code_of("ring E { family=dvr p=2 p=3 }") == ErrorCode::ParseError);
    CHECK(code_of("ring E { family=dvr p=2") == ErrorCode::ParseError);
    CHECK(code_of("module M { ring=X kind=residue_field }") == ErrorCode::ParseError);
    CHECK(code_of("ring E { family=dvr p=2 }\nmodule M { ring=E kind=blob }") == ErrorCode::ParseError);
    // summands over different rings
    CHECK(code_of("ring A { family=dvr p=2 }\nring B { family=dvr p=3 }\n"
                  "module X { ring=A kind=residue_field }\nmodule Y { ring=B kind=residue_field }\n"
                  "module S { ring=A kind=direct_sum of=[X,Y] }") == ErrorCode::ParseError);
    // positions are reported
    CHECK(message_of("ring E { family=dvr p=2 }\n\nring E { family=dvr p=2 }").find("line 3") != std::string::npos);
    CHECK(message_of("ring E { family=semigroup p=2 gens=[2,4] }").find("line 1") != std::string::npos);
}

TEST_CASE("desk workspace") {
    Workspace ws = parse_workspace(desk_workspace_text());
    for (const std::string r : {"DVR2", "DVR3", "DVR5", "E2", "E3", "E25", "E378", "A2", "A3"}) {
        CHECK(ws.rings.count(r) == 1);
    }
    for (const auto& [name, m] : ws.modules) {
        CHECK(m.module->ring() == ws.ring(m.ring));
    }
}

TEST_CASE("report round trip") {
    ScenarioResult r;
    r.scenario = "demo";
    r.claim = "a claim";
    r.rings = "E2,E3";
    r.seed = 7;
    r.budget = 1024;
    r.consumed = 99;
    r.wall_ms = 12.5;
    Instance a;
    a.label = "first";
    a.inputs = {{"ring", "E2"}, {"M", "m"}};
    a.values = {{"classes", "4"}};
    a.expected = "x = y";
    Instance b = a;
    b.label = "second";
    b.status = Status::Budget;
    b.note = "ResourceBudget: too many classes";
    r.instances = {a, b};
    r.finish();
    CHECK(r.status == Status::Budget);

    const std::string text = to_text(r);
    ScenarioResult back = from_text(text);
    CHECK(to_text(back) == text);
    CHECK(back.instances[1].note == b.note);
    CHECK(to_text(r, false).find("wall_ms") == std::string::npos);
    // keys are sorted
    CHECK(text.find("\"budget\"") < text.find("\"claim\""));
    CHECK(text.find("\"claim\"") < text.find("\"scenario\""));

    r.instances[0].status = Status::Fail;
    r.finish();
    CHECK(r.status == Status::Fail);
    CHECK(r.count(Status::Fail) == 1);

    CHECK_THROWS_AS(from_text("{"), Error);
    CHECK_THROWS_AS(from_text("{\"scenario\": 1}"), Error);
    CHECK_THROWS_AS(parse_status("maybe"), Error);
}
