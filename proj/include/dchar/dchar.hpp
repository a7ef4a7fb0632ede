#pragma once

#include "dchar/rational.hpp"
#include "dchar/smith.hpp"
#include "dchar/complex.hpp"
#include "dchar/group.hpp"
#include "dchar/nerve.hpp"
#include "dchar/cycles.hpp"
#include "dchar/diff_char.hpp"
#include "dchar/bundle.hpp"
#include "dchar/generate.hpp"
#include "dchar/lie.hpp"
#include "dchar/reduction.hpp"
#include "dchar/io.hpp"
