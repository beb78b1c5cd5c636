#pragma once

// Convenience include pulling in the whole library.

#include "hecke/characters.hpp"
#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"
#include "hecke/poly.hpp"
#include "hecke/skew.hpp"
#include "hecke/tableaux.hpp"
#include "hecke/tensor_oracle.hpp"
#include "hecke/text.hpp"
#include "hecke/verify.hpp"
