#pragma once

#include "pronounflow/cli.hpp"
#include "pronounflow/conllu.hpp"
#include "pronounflow/error.hpp"
#include "pronounflow/evaluation.hpp"
#include "pronounflow/fillmask.hpp"
#include "pronounflow/identifier.hpp"
#include "pronounflow/io.hpp"
#include "pronounflow/lexicon.hpp"
#include "pronounflow/matcher.hpp"
#include "pronounflow/merger.hpp"
#include "pronounflow/remote_backend.hpp"
#include "pronounflow/report_json.hpp"
#include "pronounflow/text.hpp"
#include "pronounflow/winventor.hpp"
