#pragma once

#include "qvl/dsl.hpp"
#include "qvl/enumeration.hpp"
#include "qvl/errors.hpp"
#include "qvl/extension.hpp"
#include "qvl/families.hpp"
#include "qvl/field.hpp"
#include "qvl/ideal.hpp"
#include "qvl/json_io.hpp"
#include "qvl/matrix.hpp"
#include "qvl/presentation.hpp"
#include "qvl/quiver.hpp"
#include "qvl/representation.hpp"
#include "qvl/witness.hpp"
