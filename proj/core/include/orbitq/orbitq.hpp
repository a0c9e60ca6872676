#pragma once

#include "orbitq/error.hpp"
#include "orbitq/geometry.hpp"
#include "orbitq/ktheory.hpp"
#include "orbitq/quantize.hpp"
#include "orbitq/rational.hpp"
#include "orbitq/repring.hpp"
#include "orbitq/rootdata.hpp"
#include "orbitq/serialize.hpp"
#include "orbitq/weight.hpp"
