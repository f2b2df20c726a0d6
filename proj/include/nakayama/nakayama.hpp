#pragma once

#include "rational.hpp"
#include "kupisch.hpp"
#include "cartan.hpp"
#include "resolution_quiver.hpp"
#include "dyck.hpp"
#include "trees.hpp"
#include "bijections.hpp"
#include "enumeration.hpp"
#include "io.hpp"
