#pragma once

#include "socular/error.hpp"
#include "socular/gkdim.hpp"
#include "socular/hollow.hpp"
#include "socular/oracles.hpp"
#include "socular/parabolic.hpp"
#include "socular/partition.hpp"
#include "socular/rational.hpp"
#include "socular/richardson.hpp"
#include "socular/serialize.hpp"
#include "socular/tableau.hpp"
#include "socular/transforms.hpp"
#include "socular/weights.hpp"
#include "socular/zdiagram.hpp"
