#pragma once

#include "betti/rational.hpp"
#include "betti/diagram.hpp"
#include "betti/format.hpp"
#include "betti/pure.hpp"
#include "betti/fan.hpp"
#include "betti/matrix.hpp"
#include "betti/hilbert_basis.hpp"
#include "betti/semigroup.hpp"
#include "betti/obstructions.hpp"
#include "betti/facts.hpp"
