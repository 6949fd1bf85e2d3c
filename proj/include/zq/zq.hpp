#pragma once

#include "zq/bounds.hpp"
#include "zq/code.hpp"
#include "zq/constructions.hpp"
#include "zq/covering.hpp"
#include "zq/errors.hpp"
#include "zq/matrix_io.hpp"
#include "zq/rational.hpp"
#include "zq/residue.hpp"

namespace zq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zq
