#include "pa/personality_code.hpp"

#include "pa/error.hpp"

namespace pa {

Axis parse_axis(std::string_view name) {
  for (const auto& a : kAxes) {
    if (a.name == name) return a.axis;
  }
  throw Error(Errc::invalid_argument, "unknown axis: " + std::string(name));
}

Axis axis_of_pole(char pole) {
  for (const auto& a : kAxes) {
    if (a.first_pole == pole || a.second_pole == pole) return a.axis;
  }
  throw Error(Errc::invalid_argument, std::string("not a pole letter: ") + pole);
}

bool PersonalityCode::is_valid(std::string_view text) noexcept {
  if (text.size() != kAxisCount) return false;
  for (std::size_t i = 0; i < kAxisCount; ++i) {
    if (text[i] != kAxes[i].first_pole && text[i] != kAxes[i].second_pole) return false;
  }
  return true;
}

PersonalityCode PersonalityCode::parse(std::string_view text) {
  if (!is_valid(text)) {
    throw Error(Errc::invalid_argument, "illegal personality code: " + std::string(text));
  }
  std::array<char, kAxisCount> letters{};
  for (std::size_t i = 0; i < kAxisCount; ++i) letters[i] = text[i];
  return PersonalityCode(letters);
}

PersonalityCode PersonalityCode::from_poles(const std::array<bool, kAxisCount>& first_pole) {
  std::array<char, kAxisCount> letters{};
  for (std::size_t i = 0; i < kAxisCount; ++i) {
    letters[i] = first_pole[i] ? kAxes[i].first_pole : kAxes[i].second_pole;
  }
  return PersonalityCode(letters);
}

double similarity(const PersonalityCode& a, const PersonalityCode& b) noexcept {
  int agree = 0;
  for (const auto& axis : kAxes) {
    if (a.pole(axis.axis) == b.pole(axis.axis)) ++agree;
  }
  return agree / static_cast<double>(kAxisCount);
}

double similarity(std::string_view a, std::string_view b) {
  return similarity(PersonalityCode::parse(a), PersonalityCode::parse(b));
}

}  // namespace pa
