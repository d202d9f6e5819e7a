#pragma once

#include "errors.hpp"
#include "families.hpp"
#include "operators.hpp"
#include "polynomial.hpp"
#include "verify.hpp"
#include "words.hpp"
