#pragma once

// Everything except file I/O and reporting, which need the bundled JSON
// header: include pcmtk/io.hpp or pcmtk/compliance.hpp for those.

#include "pcmtk/axioms.hpp"
#include "pcmtk/eigen.hpp"
#include "pcmtk/error.hpp"
#include "pcmtk/indices.hpp"
#include "pcmtk/pcm.hpp"
#include "pcmtk/random.hpp"
#include "pcmtk/similarity.hpp"
#include "pcmtk/triad_generator.hpp"
#include "pcmtk/verdict.hpp"
#include "pcmtk/version.hpp"
