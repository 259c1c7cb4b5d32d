#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tancx/simplicial.hpp"

namespace tancx {

/// Nerve of the additive group V = Q^d: level l is V^l, d_0 and d_l drop the
/// first and last coordinate, the middle faces add neighbours, s_j inserts 0.
SimplicialVS nerve_group_vs(std::size_t d, int max_level);

/// Pair groupoid of V = Q^d: level k is V^{k+1}, d_i deletes coordinate i,
/// s_i repeats it.
SimplicialVS nerve_pair_groupoid(std::size_t d, int max_level);

/// Additive classifying complex: level k is S_{k-1} ⊕ .. ⊕ S_0. Keeps the
/// max level of `s`, so the top level of `s` is never read.
SimplicialVS wbar(const SimplicialVS& s);

/// A named, parameterised fixture. `expected_tangent` has one entry per
/// level 0..max_level.
struct ExampleSpec {
    std::string name;
    std::string summary;
    std::vector<std::size_t> dims;
    int max_level = 0;
    std::vector<std::size_t> expected_tangent;
    /// The expectation is a recorded profile of a model that is not built
    /// faithfully here; it is reported, not enforced.
    bool documentation_only = false;
};

/// Default parameters for every preset, in a fixed order.
std::vector<ExampleSpec> catalogue();

std::vector<std::string> example_names();

/// Preset `name` with optional overrides. Throws InvalidArgument for unknown
/// names or parameters out of range.
ExampleSpec make_example(const std::string& name,
                         const std::optional<std::vector<std::size_t>>& dims = std::nullopt,
                         std::optional<int> max_level = std::nullopt);

SimplicialVS build(const ExampleSpec& spec);

}  // namespace tancx
