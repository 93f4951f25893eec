#pragma once

#include "efdepth/graph.hpp"
#include "efdepth/families.hpp"
#include "efdepth/induced.hpp"
#include "efdepth/io.hpp"
#include "efdepth/canonical.hpp"
#include "efdepth/instances.hpp"
#include "efdepth/formula.hpp"
#include "efdepth/parser.hpp"
#include "efdepth/eval.hpp"
#include "efdepth/synth.hpp"
#include "efdepth/game.hpp"
#include "efdepth/solver.hpp"
#include "efdepth/policy.hpp"
#include "efdepth/extract.hpp"
#include "efdepth/play.hpp"
#include "efdepth/bounds.hpp"
#include "efdepth/certificate.hpp"
#include "efdepth/search.hpp"
#include "efdepth/suite.hpp"
