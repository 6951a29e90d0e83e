#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kazhdan/backend.hpp"
#include "kazhdan/presentation.hpp"
#include "kazhdan/rewriting.hpp"

namespace kazhdan {

struct PresetOptions {
    CompletionBudget budget;
    /// Word length up to which the relator-insertion closure refines
    /// normal forms of presentation backends (normally 2d).
    std::size_t closure_radius = 4;
};

struct GroupPreset {
    std::string name;
    BackendPtr backend;
    /// Present for presentation-backed groups (used by `describe`).
    std::optional<PresentationSpec> presentation;
    std::size_t generating_set_size = 0;
    /// Smallest l such that every relation u = v, split as evenly as
    /// possible, has sides shorter than 4l; 1 without relators.
    int suggested_radius = 1;
    /// Radius used by default for this family (matches the published runs).
    int default_radius = 2;
};

/// Builds a named group. Recognized names:
///   ronan:G1..G4, steinberg:N, sl:N:Z, sl:N:Fp, coxeter:<type><rank>
///   (A_n, B_n, D_n, E6-E8, F4, H3, H4, I2(m) as `I2:m`), gmpn:m:p:n,
///   cyclic:m, free:k, a2tilde:<triangle file>, a2tilde:q2[:index],
///   file:<presentation file>.
/// Throws InputError for unknown names or invalid parameters.
GroupPreset make_preset(std::string_view name, const PresetOptions& options = {});

/// The radius `make_preset(name).default_radius` would report, without
/// building the group.
int preset_default_radius(std::string_view name);

/// One line per preset family for `list`.
std::vector<std::string> preset_families();

/// Names used by the built-in table runs.
std::vector<std::string> table_presets();

int suggested_radius(const PresentationSpec& spec);

/// Symmetric Coxeter matrix (0 on the diagonal means m_ii = 1; entries
/// are the orders m_ij) for a Dynkin type.
std::vector<std::vector<int>> coxeter_matrix(char family, int rank);
PresentationSpec coxeter_presentation(char family, int rank);
PresentationSpec ronan_presentation(int index);
PresentationSpec steinberg_presentation(int n);
PresentationSpec cyclic_presentation(int m);
PresentationSpec free_presentation(int k);

}  // namespace kazhdan
