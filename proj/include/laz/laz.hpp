#pragma once

// Umbrella header.

#include "laz/error.hpp"
#include "laz/numtheory.hpp"
#include "laz/lpnf.hpp"
#include "laz/seqset.hpp"
#include "laz/afengine.hpp"
#include "laz/bounds.hpp"
#include "laz/io.hpp"
