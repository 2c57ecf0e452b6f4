#pragma once

#include "hookblock/blocks.hpp"
#include "hookblock/characters.hpp"
#include "hookblock/checked.hpp"
#include "hookblock/diagram.hpp"
#include "hookblock/jantzen.hpp"
#include "hookblock/matrix.hpp"
#include "hookblock/mullineux.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/report.hpp"
#include "hookblock/specht.hpp"
#include "hookblock/structure.hpp"
#include "hookblock/tableau.hpp"
#include "hookblock/verify.hpp"
#include "hookblock/weight.hpp"
