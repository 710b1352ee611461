#pragma once

// Line-oriented workspace files declaring rings, modules and ideals:
//
//   ring E2 { family=semigroup p=2 gens=[2,3] }
//   ring A2 { family=artin p=2 vars=[x,y] ideal=["x^2","x*y","y^2"] }
//   module M { ring=E2 kind=frac_ideal gens=["t^2","t^3"] }
//   module S { ring=E2 kind=direct_sum of=[M,M] }
//   ideal I { ring=E2 gens=["t^2","t^3"] }
//
// '#' starts a comment.

#include <map>
#include <string>
#include <vector>

#include "subext/modules.hpp"
#include "subext/rings.hpp"

namespace subext {

struct WorkspaceModule {
    std::string ring;
    std::string kind;
    ModulePtr module;
};

struct WorkspaceIdeal {
    std::string ring;
    FracIdeal ideal;
};

struct Workspace {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, WorkspaceModule> modules;
    std::map<std::string, WorkspaceIdeal> ideals;
    // declaration order of each kind
    std::vector<std::string> ring_order, module_order, ideal_order;

    const RingPtr& ring(const std::string& name) const;
    const ModulePtr& module(const std::string& name) const;
    const FracIdeal& ideal(const std::string& name) const;
    std::vector<std::string> modules_over(const std::string& ring) const;
};

// Throws ParseError ("line L, column C: ...") or the validation error of the
// offending declaration.
Workspace parse_workspace(const std::string& text);

// The bundled desk-scale workspace (workspaces/desk.ws).
const std::string& desk_workspace_text();

} // namespace subext
