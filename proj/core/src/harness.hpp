#pragma once

// Shared plumbing of the scenario implementations.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "subext/ext.hpp"
#include "subext/scenarios.hpp"
#include "subext/subfun.hpp"

namespace subext::detail {

using Named = std::pair<std::string, ModulePtr>;
using Inputs = std::map<std::string, std::string>;

// Exps style: [1,2,inf]
std::string str(const Exps& e);
inline std::string str(bool b) { return b ? "true" : "false"; }
inline std::string str(std::uint64_t n) { return std::to_string(n); }
inline std::string str(int n) { return std::to_string(n); }

// a is a subset of b; both sorted
bool included(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

class Ctx {
public:
    Ctx(const ScenarioOptions& opt, const Workspace& ws, ScenarioResult& res) : opt_(opt), ws_(ws), res_(res) {}

    const Workspace& ws() const { return ws_; }
    const RingPtr& ring(const std::string& name);
    std::uint64_t budget() const { return opt_.budget; }
    std::uint64_t seed() const { return opt_.seed; }

    // The body fills values and returns whether the expected relation holds.
    void run(const std::string& label, Inputs inputs, const std::string& expected,
             const std::function<bool(Instance&)>& body);

    // Presentation whose classes are about to be enumerated; counts them.
    ExtPtr ext(const ModulePtr& M, const ModulePtr& N);
    void consume(std::uint64_t n) { res_.consumed += n; }

private:
    const ScenarioOptions& opt_;
    const Workspace& ws_;
    ScenarioResult& res_;
    std::vector<std::string> rings_;
};

using ScenarioFn = std::function<void(Ctx&)>;
struct ScenarioDef {
    std::string name;
    std::string claim;
    ScenarioFn fn;
};

std::vector<ScenarioDef> mu_scenarios();
std::vector<ScenarioDef> ulrich_scenarios();

ModulePtr max_ideal_module(const RingPtr& R);
ModulePtr blowup_module(const RingPtr& R);
// small modules of every kind over R
std::vector<Named> general_sample(const RingPtr& R);
// maximal Cohen-Macaulay modules of rank at most two (dimension one)
std::vector<Named> mcm_sample(const RingPtr& R);
std::vector<Named> ulrich_sample(const FracIdeal& I, int count, std::uint64_t seed);
// Ul^0_m: vector spaces over k
std::vector<Named> ulrich0_sample(const RingPtr& R);

} // namespace subext::detail
