#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "realdecide/multipoly.hpp"
#include "realdecide/signdet.hpp"

namespace realdecide {

// A conjunction of multivariate sign conditions. The decision core handles
// relations in {>=, >, =}; the parser maps <=, <, != onto these by negation.
struct SignSystem {
    std::vector<MultiPoly> polys;
    std::vector<Relation> relations;
    std::size_t arity = 0;

    void validate() const {
        if (polys.size() != relations.size())
            throw std::invalid_argument("polynomial/relation count mismatch");
        for (const auto& p : polys)
            if (p.arity() != arity) throw std::invalid_argument("system arity mismatch");
        for (Relation r : relations)
            if (r != Relation::Ge && r != Relation::Gt && r != Relation::Eq)
                throw std::invalid_argument("decision core accepts only >=, >, =");
    }
};

}  // namespace realdecide
