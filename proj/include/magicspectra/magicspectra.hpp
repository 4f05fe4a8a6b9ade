// Umbrella header.
#pragma once

#include "magicspectra/circulant.hpp"
#include "magicspectra/decompose.hpp"
#include "magicspectra/dft.hpp"
#include "magicspectra/eigen.hpp"
#include "magicspectra/errors.hpp"
#include "magicspectra/hungarian.hpp"
#include "magicspectra/linear_solve.hpp"
#include "magicspectra/magic_gen.hpp"
#include "magicspectra/matrix.hpp"
#include "magicspectra/norms.hpp"
#include "magicspectra/spectra.hpp"
#include "magicspectra/table_format.hpp"
#include "magicspectra/tolerance.hpp"
