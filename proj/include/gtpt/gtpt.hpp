#pragma once

#include "gtpt/conditions.hpp"
#include "gtpt/constructions.hpp"
#include "gtpt/enumeration.hpp"
#include "gtpt/error.hpp"
#include "gtpt/graph.hpp"
#include "gtpt/io.hpp"
#include "gtpt/iso.hpp"
#include "gtpt/matrix.hpp"
#include "gtpt/spectral.hpp"
#include "gtpt/transpose.hpp"
