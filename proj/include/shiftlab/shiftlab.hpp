#pragma once

#include "codes.hpp"
#include "entropy.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "irreducibility.hpp"
#include "lattice.hpp"
#include "presentation.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "shifts.hpp"
#include "strip.hpp"
