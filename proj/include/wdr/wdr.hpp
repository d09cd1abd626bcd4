#pragma once

#include "wdr/analysis.hpp"
#include "wdr/arcs.hpp"
#include "wdr/cayley.hpp"
#include "wdr/census.hpp"
#include "wdr/closure.hpp"
#include "wdr/digraph.hpp"
#include "wdr/io.hpp"
#include "wdr/isomorphism.hpp"
#include "wdr/properties.hpp"
#include "wdr/scheme.hpp"
