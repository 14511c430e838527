#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tgr/errors.hpp"

namespace tgr {

/// A monotone 3-CNF formula: clauses of exactly three distinct positive
/// variables, interpreted not-all-equal.  Clauses keep input order;
/// variables are indices into `variables`.
struct MonotoneCnf {
    std::vector<std::string> variables;
    std::vector<std::array<int, 3>> clauses;

    /// Validates and builds a formula from variable names.
    static MonotoneCnf make(std::vector<std::string> variables,
                            const std::vector<std::array<std::string, 3>>& clause_names) {
        MonotoneCnf cnf;
        std::map<std::string, int> index;
        for (const std::string& v : variables) {
            if (v.empty()) throw ValidationError("variable names must be non-empty");
            if (!index.emplace(v, static_cast<int>(index.size())).second)
                throw ValidationError("duplicate variable '" + v + "'");
        }
        if (clause_names.empty()) throw ValidationError("formula needs at least one clause");
        for (const auto& names : clause_names) {
            std::array<int, 3> clause{};
            for (int j = 0; j < 3; ++j) {
                auto it = index.find(names[j]);
                if (it == index.end())
                    throw ValidationError("clause references unknown variable '" + names[j] + "'");
                clause[j] = it->second;
            }
            if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
                throw ValidationError("clause (" + names[0] + ", " + names[1] + ", " + names[2] +
                                      ") repeats a variable");
            cnf.clauses.push_back(clause);
        }
        cnf.variables = std::move(variables);
        return cnf;
    }

    /// Not-all-equal evaluation under a 0/1 assignment per variable.
    bool nae_satisfied(const std::vector<int>& assignment) const {
        for (const auto& c : clauses) {
            int a = assignment[c[0]], b = assignment[c[1]], d = assignment[c[2]];
            if (a == b && b == d) return false;
        }
        return true;
    }
};

}  // namespace tgr
