#ifndef LATSPEC_HPP
#define LATSPEC_HPP

#include "latspec/bits.hpp"
#include "latspec/catalog.hpp"
#include "latspec/dot.hpp"
#include "latspec/duality.hpp"
#include "latspec/enumerate.hpp"
#include "latspec/error.hpp"
#include "latspec/lattice.hpp"
#include "latspec/report.hpp"
#include "latspec/spectra.hpp"
#include "latspec/suites.hpp"
#include "latspec/topology.hpp"

#endif  // LATSPEC_HPP
