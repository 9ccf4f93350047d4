#pragma once

#include "nichols/rational.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/words.hpp"
#include "nichols/freealgebra.hpp"
#include "nichols/linalg.hpp"
#include "nichols/modular.hpp"
#include "nichols/weyl.hpp"
#include "nichols/classify.hpp"
#include "nichols/gram.hpp"
#include "nichols/quotient.hpp"
#include "nichols/roots.hpp"
#include "nichols/dimension.hpp"
#include "nichols/relations.hpp"
#include "nichols/coproduct.hpp"
#include "nichols/io.hpp"
