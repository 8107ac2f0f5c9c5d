#pragma once

// Umbrella header.
#include <oinst/cohomology.hpp>
#include <oinst/error.hpp>
#include <oinst/io.hpp>
#include <oinst/kronecker.hpp>
#include <oinst/linalg.hpp>
#include <oinst/linform.hpp>
#include <oinst/matrix.hpp>
#include <oinst/moduli.hpp>
#include <oinst/monad.hpp>
#include <oinst/rational.hpp>
#include <oinst/tensor.hpp>
