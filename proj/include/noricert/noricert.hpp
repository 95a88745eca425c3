#pragma once

#include "noricert/rational.hpp"
#include "noricert/poly.hpp"
#include "noricert/certificate.hpp"
#include "noricert/family.hpp"
#include "noricert/circle.hpp"
#include "noricert/roots.hpp"
#include "noricert/filtered.hpp"
#include "noricert/bounds.hpp"
#include "noricert/sampling.hpp"
#include "noricert/atlas.hpp"
#include "noricert/disktrace.hpp"
#include "noricert/pipeline.hpp"
