#pragma once

#include <string>

#include "gmchase/scenario.hpp"

namespace gmchase {

/// Renders the village narrative: the preamble, the cheaters with their
/// mistress/lover pairs (self-pairs flagged), and each faithful man's
/// request dialogue in increasing index order. Pure function of the
/// scenario; LF newlines, newline-terminated.
std::string tell_story(const Scenario& s);

}  // namespace gmchase
