from typing import Literal


Direction = Literal["max", "min"]
OrderDirection = Literal["non-increasing", "non-decreasing"]

ExactMethodName = Literal["brute-force", "branch-and-bound", "subexponential"]
ApproxBranchName = Literal["greedy", "bounded-degree", "candidate-enum"]
NodeKind = Literal["leaf", "introduce-vertex", "introduce-edge", "forget", "join"]

AlgorithmName = Literal["brute", "bnb", "greedy", "fptas", "topdeg", "subexp", "third"]
OutputFormat = Literal["json", "csv", "text"]
SuiteName = Literal["approx", "gap", "subexp", "exchange"]
FamilyName = Literal["gap", "gnm", "grid", "regular"]
