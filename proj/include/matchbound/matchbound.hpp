#pragma once

#include "matchbound/bounds.hpp"
#include "matchbound/canonical.hpp"
#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/io.hpp"
#include "matchbound/matching.hpp"
#include "matchbound/membership.hpp"
#include "matchbound/star.hpp"
#include "matchbound/transform.hpp"
#include "matchbound/verify.hpp"
