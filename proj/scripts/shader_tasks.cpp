// Shader-stage questions from correct/distractor lists.
#include "samples.hpp"

int main()
{
  qbank::QuestionBank bank("shader_tasks.xml");
  samples::build_shader_tasks(bank);
  bank.close();
}
