#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "subext/error.hpp"
#include "subext/ulrich.hpp"

namespace subext {

namespace detail {

std::string str(const Exps& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        out += (i ? "," : "");
        out += is_free_exp(e[i]) ? std::string("inf") : std::to_string(e[i]);
    }
    return out + "]";
}

bool included(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

const RingPtr& Ctx::ring(const std::string& name) {
    const RingPtr& R = ws_.ring(name);
    if (std::find(rings_.begin(), rings_.end(), name) == rings_.end()) {
        rings_.push_back(name);
        res_.rings = res_.rings.empty() ? name : res_.rings + "," + name;
    }
    return R;
}

void Ctx::run(const std::string& label, Inputs inputs, const std::string& expected,
              const std::function<bool(Instance&)>& body) {
    Instance inst;
    inst.label = label;
    inst.inputs = std::move(inputs);
    inst.expected = expected;
    try {
        inst.status = body(inst) ? Status::Pass : Status::Fail;
    } catch (const Error& e) {
        const bool budget = e.code() == ErrorCode::ResourceBudget || e.code() == ErrorCode::StabilizationBudget;
        inst.status = budget ? Status::Budget : Status::Fail;
        inst.note = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        inst.status = Status::Fail;
        inst.note = e.what();
    }
    res_.instances.push_back(std::move(inst));
}

ExtPtr Ctx::ext(const ModulePtr& M, const ModulePtr& N) {
    ExtPtr e = ExtPresentation::build(M, N);
    consume(e->class_count(opt_.budget));
    return e;
}

ModulePtr max_ideal_module(const RingPtr& R) { return from_fractional_ideal(FracIdeal::maximal(R)); }

ModulePtr blowup_module(const RingPtr& R) { return from_fractional_ideal(blow_up(FracIdeal::maximal(R)).as_module); }

std::vector<Named> general_sample(const RingPtr& R) {
    std::vector<Named> out = {{"k", residue_field(R)}, {"R", free_module(R, 1)}};
    if (R->family() == Family::Artin) {
        out.emplace_back("w", canonical_module(R));
        const std::string v = R->spec().vars.front();
        out.emplace_back("R/(" + v + ")", from_quotient(parse_frac_ideal(R, {v})));
        return out;
    }
    out.emplace_back("m", max_ideal_module(R));
    const int a = R->semigroup_gens().front() == 1 ? 2 : R->semigroup_gens().front();
    out.emplace_back("R/t^" + std::to_string(a), from_quotient(FracIdeal::monomial(R, {a})));
    if (R->semigroup_gens() != std::vector<int>{1}) {
        out.emplace_back("w", canonical_module(R));
        out.emplace_back("B(m)", blowup_module(R));
    }
    return out;
}

std::vector<Named> mcm_sample(const RingPtr& R) {
    ModulePtr m = max_ideal_module(R);
    std::vector<Named> out = {{"R", free_module(R, 1)}, {"m", m}};
    if (R->semigroup_gens() == std::vector<int>{1}) {
        out.emplace_back("R+m", direct_sum({free_module(R, 1), m}));
        return out;
    }
    ModulePtr B = blowup_module(R);
    ModulePtr w = canonical_module(R);
    out.emplace_back("m^2", from_fractional_ideal(ideal_power(FracIdeal::maximal(R), 2)));
    out.emplace_back("B(m)", B);
    out.emplace_back("w", w);
    for (int g = 1; g < R->frobenius() + 1; ++g) {
        if (!R->in_semigroup(g)) {
            out.emplace_back("(1,t^" + std::to_string(g) + ")", from_fractional_ideal(FracIdeal::monomial(R, {0, g})));
            break;
        }
    }
    out.emplace_back("m+B(m)", direct_sum({m, B}));
    out.emplace_back("m+w", direct_sum({m, w}));
    return out;
}

std::vector<Named> ulrich_sample(const FracIdeal& I, int count, std::uint64_t seed) {
    std::vector<Named> out;
    for (auto& u : ul_sample(I, count, seed)) {
        out.emplace_back(u.name, u.module);
    }
    return out;
}

std::vector<Named> ulrich0_sample(const RingPtr& R) {
    ModulePtr k = residue_field(R);
    return {{"k", k}, {"k+k", direct_sum({k, k})}};
}

std::vector<ScenarioDef> all_defs() {
    std::vector<ScenarioDef> defs = mu_scenarios();
    for (auto& d : ulrich_scenarios()) {
        defs.push_back(std::move(d));
    }
    std::sort(defs.begin(), defs.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return defs;
}

const std::vector<ScenarioDef>& defs() {
    static const std::vector<ScenarioDef> d = all_defs();
    return d;
}

} // namespace detail

using namespace detail;

const std::vector<ScenarioInfo>& scenario_registry() {
    static const std::vector<ScenarioInfo> reg = [] {
        std::vector<ScenarioInfo> r;
        for (const auto& d : defs()) {
            r.push_back({d.name, d.claim});
        }
        return r;
    }();
    return reg;
}

ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& opts) {
    const auto& all = defs();
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& d) { return d.name == name; });
    if (it == all.end()) {
        fail(ErrorCode::UnknownScenario, "unknown scenario '" + name + "'");
    }
    const auto t0 = std::chrono::steady_clock::now();
    ScenarioResult res;
    res.scenario = it->name;
    res.claim = it->claim;
    res.seed = opts.seed;
    res.budget = opts.budget;
    Workspace ws = parse_workspace(opts.workspace.empty() ? desk_workspace_text() : opts.workspace);
    Ctx ctx(opts, ws, res);
    try {
        it->fn(ctx);
    } catch (const std::exception& e) {
        Instance setup;
        setup.label = "setup";
        setup.expected = "scenario inputs can be built";
        setup.status = Status::Fail;
        setup.note = e.what();
        res.instances.push_back(setup);
    }
    if (res.instances.empty()) {
        Instance none;
        none.label = "empty";
        none.expected = "at least one instance";
        none.status = Status::Fail;
        res.instances.push_back(none);
    }
    res.finish();
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<ScenarioResult> run_scenarios(const std::vector<std::string>& names, const ScenarioOptions& opts,
                                          int threads) {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& n : sorted) {
        if (std::none_of(defs().begin(), defs().end(), [&](const auto& d) { return d.name == n; })) {
            fail(ErrorCode::UnknownScenario, "unknown scenario '" + n + "'");
        }
    }
    std::vector<ScenarioResult> out(sorted.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < sorted.size(); i = next++) {
            out[i] = run_scenario(sorted[i], opts);
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(sorted.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    return out;
}

// ---------------------------------------------------------------- compute

namespace {

using json = nlohmann::json;

json exps_json(const Exps& e) {
    json a = json::array();
    for (int x : e) {
        if (is_free_exp(x)) {
            a.push_back("inf");
        } else {
            a.push_back(x);
        }
    }
    return a;
}

FracIdeal ideal_arg(const Workspace& ws, const RingPtr& R, const std::string& name) {
    if (name == "m") {
        return FracIdeal::maximal(R);
    }
    const FracIdeal& I = ws.ideal(name);
    if (I.ring != R) {
        fail(ErrorCode::InvalidArgument, "ideal '" + name + "' lives over another ring");
    }
    return I;
}

NumFn fn_arg(const Workspace& ws, const RingPtr& R, const std::string& text) {
    const auto c = text.find(':');
    const std::string tag = text.substr(0, c);
    const std::string arg = c == std::string::npos ? "" : text.substr(c + 1);
    if (tag == "mu") {
        return NumFn::mu();
    }
    if (tag == "nu") {
        return NumFn::nu(ideal_arg(ws, R, arg.empty() ? "m" : arg));
    }
    if (tag == "et") {
        return NumFn::et(ideal_arg(ws, R, arg.empty() ? "m" : arg));
    }
    if (tag == "len_tensor") {
        return NumFn::len_tensor(ws.module(arg));
    }
    if (tag == "len_hom_from") {
        return NumFn::len_hom_from(ws.module(arg));
    }
    if (tag == "len_hom_to") {
        return NumFn::len_hom_to(ws.module(arg));
    }
    fail(ErrorCode::InvalidArgument, "unknown numerical function '" + text + "'");
}

void need_labels(const ComputeRequest& req, std::size_t n) {
    if (req.labels.size() != n) {
        fail(ErrorCode::InvalidArgument, req.cmd + " takes " + std::to_string(n) + " label(s)");
    }
}

json module_json(const ModulePtr& M) {
    json j;
    j["exps"] = exps_json(M->exps());
    j["mu"] = mu(*M);
    const bool finite = free_rank(M->exps()) == 0;
    j["length"] = finite ? json(length(*M)) : json(nullptr);
    j["depth"] = depth01(*M);
    j["mcm"] = is_mcm(*M);
    return j;
}

json subset_json(const SubsetResult& s) {
    json j;
    j["total"] = s.total;
    j["size"] = s.size();
    j["exps"] = exps_json(s.exps);
    j["closed"] = s.certificate.closed;
    if (s.size() <= 64) {
        j["indices"] = s.indices;
    }
    return j;
}

json compute_json(const Workspace& ws, const ComputeRequest& req) {
    json j;
    j["command"] = req.cmd;
    j["labels"] = req.labels;
    if (req.cmd == "ring-info") {
        need_labels(req, 1);
        RingInvariants inv = ring_invariants(ws.ring(req.labels[0]));
        j["family"] = inv.family;
        j["p"] = inv.p;
        j["dim"] = inv.dim;
        j["embedding_dim"] = inv.embedding_dim;
        j["multiplicity"] = inv.multiplicity;
        j["type"] = inv.type;
        j["frobenius"] = inv.frobenius;
        j["semigroup_gens"] = inv.semigroup_gens;
        j["regular"] = inv.regular;
        j["gorenstein"] = inv.gorenstein;
        j["minimal_multiplicity"] = inv.minimal_multiplicity;
        j["almost_gorenstein"] = inv.almost_gorenstein;
        j["almost_gorenstein_semigroup"] = inv.almost_gorenstein_semigroup;
        return j;
    }
    if (req.cmd == "mod-invariants") {
        need_labels(req, 1);
        ModulePtr M = ws.module(req.labels[0]);
        j["module"] = module_json(M);
        j["betti"] = M->resolution(3)->betti;
        SubModule tors = torsion_part(M);
        j["torsion_loewy_length"] = loewy_length(tors.module);
        return j;
    }
    need_labels(req, 2);
    ModulePtr M = ws.module(req.labels[0]);
    ModulePtr N = ws.module(req.labels[1]);
    const RingPtr& R = M->ring();
    if (req.cmd == "ext") {
        j["degree"] = req.degree;
        if (req.degree == 1) {
            ExtPtr e = ExtPresentation::build(M, N);
            j["exps"] = exps_json(e->exps());
            j["length"] = e->length();
            try {
                j["classes"] = e->class_count(req.budget);
            } catch (const Error& err) {
                if (err.code() != ErrorCode::ResourceBudget) {
                    throw;
                }
                j["classes"] = nullptr;
            }
        } else {
            ModulePtr E = ext_module(M, N, req.degree);
            j["exps"] = exps_json(E->exps());
            j["length"] = length(*E);
        }
        return j;
    }
    if (req.cmd == "ext-sub") {
        std::vector<NumFn> fns;
        for (const auto& f : req.fns.empty() ? std::vector<std::string>{"mu"} : req.fns) {
            fns.push_back(fn_arg(ws, R, f));
        }
        SubsetResult s = ext1_sub(M, N, fns, req.budget);
        j["fns"] = req.fns.empty() ? std::vector<std::string>{"mu"} : req.fns;
        j["subset"] = subset_json(s);
        j["m_ext_size"] = ideal_times_classes(s.ext, FracIdeal::maximal(R), req.budget).size();
        return j;
    }
    if (req.cmd == "ext-ul") {
        UlResult u = ext1_ul(M, N, ideal_arg(ws, R, req.ideal), req.s, req.budget);
        j["ideal"] = req.ideal;
        j["s"] = req.s;
        j["ul"] = subset_json(u.ul);
        j["nu"] = subset_json(u.nu);
        j["agree"] = u.agree;
        return j;
    }
    if (req.cmd == "verify-ses") {
        ExtPtr e = ExtPresentation::build(M, N);
        const std::uint64_t total = e->class_count(req.budget);
        if (req.class_index < 0 || static_cast<std::uint64_t>(req.class_index) >= total) {
            fail(ErrorCode::InvalidArgument, "class index out of range (" + std::to_string(total) + " classes)");
        }
        SES s = middle(e->class_at(static_cast<std::uint64_t>(req.class_index)));
        j["class"] = req.class_index;
        j["middle"] = module_json(s.X);
        j["exact"] = is_exact(s);
        j["split"] = is_split(s);
        json add = json::object();
        for (const auto& f : req.fns.empty() ? std::vector<std::string>{"mu"} : req.fns) {
            add[f] = is_additive(fn_arg(ws, R, f), s);
        }
        j["additive"] = add;
        return j;
    }
    fail(ErrorCode::InvalidArgument, "unknown command '" + req.cmd + "'");
}

} // namespace

std::string compute(const Workspace& ws, const ComputeRequest& req, bool* ok) {
    json j;
    bool good = true;
    try {
        j = compute_json(ws, req);
    } catch (const Error& e) {
        good = false;
        j = json{{"command", req.cmd}, {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    }
    if (ok) {
        *ok = good;
    }
    return j.dump(2) + "\n";
}

} // namespace subext
