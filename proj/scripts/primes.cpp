// Three-digit primes against plausible composite distractors.
#include "samples.hpp"

int main()
{
  qbank::QuestionBank bank("primes.xml");
  samples::build_primes(bank);
  bank.close();
}
