#ifndef HTV_SYMCORE_VARIABLE_HPP
#define HTV_SYMCORE_VARIABLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace htv {

/**
 * The fixed variable universe, listed from highest to lowest in the term
 * order.
 *
 *   Alpha  mean curvature
 *   Kappa  product k2*k3 of the two remaining principal curvatures
 *   C      sectional curvature of the ambient space form
 *   U      e1(alpha)
 *   W      beta2 + beta3
 *   Beta2, Beta3, K2, K3, D2 = e1(k2), D3 = e1(k3)   extended-ring symbols
 */
enum class Variable : std::uint8_t { Alpha, Kappa, C, U, W, Beta2, Beta3, K2, K3, D2, D3 };

inline constexpr std::size_t kVariableCount = 11;

inline constexpr std::array<Variable, kVariableCount> kAllVariables = {
    Variable::Alpha, Variable::Kappa, Variable::C,  Variable::U,  Variable::W,  Variable::Beta2,
    Variable::Beta3, Variable::K2,    Variable::K3, Variable::D2, Variable::D3};

constexpr std::size_t index_of(Variable v) noexcept { return static_cast<std::size_t>(v); }

constexpr std::string_view name_of(Variable v) noexcept {
    constexpr std::array<std::string_view, kVariableCount> names = {
        "a", "k", "c", "u", "w", "b2", "b3", "k2", "k3", "d2", "d3"};
    return names[index_of(v)];
}

inline std::optional<Variable> variable_from_name(std::string_view name) noexcept {
    for (Variable v : kAllVariables) {
        if (name_of(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace htv

#endif  // HTV_SYMCORE_VARIABLE_HPP
