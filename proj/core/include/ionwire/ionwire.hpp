#pragma once

// Umbrella header for the wire-mediated ion coupling library.

#include "ionwire/circuit.hpp"
#include "ionwire/config.hpp"
#include "ionwire/constants.hpp"
#include "ionwire/decoherence.hpp"
#include "ionwire/dynamics.hpp"
#include "ionwire/electrostatics.hpp"
#include "ionwire/errors.hpp"
#include "ionwire/species.hpp"
#include "ionwire/state.hpp"
