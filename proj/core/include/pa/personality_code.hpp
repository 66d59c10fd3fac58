#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace pa {

/// The five personality axes, in code-position order.
enum class Axis : std::size_t {
  sociability = 0,     // O outgoing / R reserved
  decision_basis = 1,  // E empathy / M mind
  work_style = 2,      // T team player / L lone wolf
  authority = 3,       // C takes commands / D defies authority
  structure = 4,       // S strict routine / F flexible
};

inline constexpr std::size_t kAxisCount = 5;

struct AxisInfo {
  Axis axis;
  std::string_view name;
  char first_pole;
  char second_pole;
};

inline constexpr std::array<AxisInfo, kAxisCount> kAxes{{
    {Axis::sociability, "sociability", 'O', 'R'},
    {Axis::decision_basis, "decision_basis", 'E', 'M'},
    {Axis::work_style, "work_style", 'T', 'L'},
    {Axis::authority, "authority", 'C', 'D'},
    {Axis::structure, "structure", 'S', 'F'},
}};

constexpr const AxisInfo& info(Axis axis) { return kAxes[static_cast<std::size_t>(axis)]; }

/// Throws Error(invalid_argument) for an unknown axis name.
Axis parse_axis(std::string_view name);

/// The axis a pole letter belongs to; throws Error(invalid_argument) for a non-pole letter.
Axis axis_of_pole(char pole);

/// A 5-letter type code, position i holding one pole letter of axis i ("OETCS", "RMLDF", ...).
class PersonalityCode {
 public:
  /// Throws Error(invalid_argument) unless `text` is one of the 32 legal codes.
  static PersonalityCode parse(std::string_view text);
  static bool is_valid(std::string_view text) noexcept;

  /// The code with `pole` chosen on each axis (true = first pole).
  static PersonalityCode from_poles(const std::array<bool, kAxisCount>& first_pole);

  char pole(Axis axis) const noexcept { return letters_[static_cast<std::size_t>(axis)]; }
  std::string str() const { return {letters_.begin(), letters_.end()}; }

  auto operator<=>(const PersonalityCode&) const = default;

 private:
  explicit PersonalityCode(std::array<char, kAxisCount> letters) : letters_(letters) {}
  std::array<char, kAxisCount> letters_;
};

/// Fraction of axis positions on which the two codes agree: one of 0, 0.2, ..., 1.0.
double similarity(const PersonalityCode& a, const PersonalityCode& b) noexcept;

/// String overload; throws Error(invalid_argument) for an illegal code.
double similarity(std::string_view a, std::string_view b);

}  // namespace pa

template <>
struct nlohmann::adl_serializer<pa::PersonalityCode> {
  static void to_json(json& j, const pa::PersonalityCode& v) { j = v.str(); }
  static pa::PersonalityCode from_json(const json& j) {
    return pa::PersonalityCode::parse(j.get<std::string>());
  }
};
