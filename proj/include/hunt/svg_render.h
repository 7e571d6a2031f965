#pragma once

// SVG rendering of an episode record: trajectory polyline, treasure with
// its detection disc, hint wedges, and painted tiles. Output is fully
// deterministic (no timestamps or random ids).

#include <string>

#include "hunt/episode_io.h"

namespace hunt {

std::string render_episode_svg(const EpisodeRecord& record);
void save_episode_svg(const EpisodeRecord& record, const std::string& path);

}  // namespace hunt
