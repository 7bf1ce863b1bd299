#pragma once

namespace qslice {

/// Selects the OpenMP kernel or its serial reference.
enum class Exec { serial, parallel };

}  // namespace qslice
