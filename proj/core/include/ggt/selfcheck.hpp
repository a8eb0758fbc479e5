#pragma once

#include <string>
#include <vector>

namespace ggt::selfcheck {

// One end-to-end check of the suite; `detail` carries the measured numbers
// so failures are diagnosable from the log alone.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult normal_form_oracle();            // 1
CriterionResult hyperplane_distance_identity();  // 2
CriterionResult free_group_coneoff_profile();    // 3
CriterionResult constant_map_fit();              // 4
CriterionResult lamplighter_witnesses();         // 5
CriterionResult tree_embedding_isometry();       // 6
CriterionResult graphical_criteria_table();      // 7
CriterionResult coneoff_flattening();            // 8
CriterionResult closure_and_syllabic();          // 9
CriterionResult sequence_facts();                // 10

std::vector<CriterionResult> run_all(int threads = 1);

}  // namespace ggt::selfcheck
