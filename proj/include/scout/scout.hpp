#pragma once

// Umbrella header.

#include "scout/commercial/agents.hpp"
#include "scout/commercial/knowledge_base.hpp"
#include "scout/commercial/web_client.hpp"
#include "scout/core/error.hpp"
#include "scout/core/ids.hpp"
#include "scout/core/sentences.hpp"
#include "scout/core/serialization.hpp"
#include "scout/core/taxonomy.hpp"
#include "scout/core/term_matcher.hpp"
#include "scout/core/text.hpp"
#include "scout/core/types.hpp"
#include "scout/core/union_find.hpp"
#include "scout/intelligence/categorize.hpp"
#include "scout/intelligence/cluster.hpp"
#include "scout/intelligence/filter.hpp"
#include "scout/intelligence/fragmentation.hpp"
#include "scout/intelligence/integrate.hpp"
#include "scout/intelligence/kmeans.hpp"
#include "scout/intelligence/rank.hpp"
#include "scout/intelligence/structure.hpp"
#include "scout/intelligence/sustainability.hpp"
#include "scout/intelligence/validate.hpp"
#include "scout/patent/connector.hpp"
#include "scout/patent/curate.hpp"
#include "scout/patent/dedup.hpp"
#include "scout/patent/ner.hpp"
#include "scout/patent/query.hpp"
#include "scout/patent/shingles.hpp"
#include "scout/pipeline/config.hpp"
#include "scout/pipeline/persist.hpp"
#include "scout/pipeline/run.hpp"
#include "scout/pipeline/run_state.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/factory.hpp"
#include "scout/providers/fnv.hpp"
#include "scout/providers/llm.hpp"
#include "scout/providers/remote.hpp"
#include "scout/providers/stopwords.hpp"
#include "scout/providers/synonym_graph.hpp"
#include "scout/providers/vector.hpp"
#include "scout/service/api.hpp"
#include "scout/service/report.hpp"
