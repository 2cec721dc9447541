import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from algebra import FreeComplex, parse_laurent
from torus import Placement, point_strings


def default_variables(n: int) -> List[str]:
    """x, y, z for n <= 3, otherwise z1..zn."""
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"z{k}" for k in range(1, n + 1)]


@dataclass
class ComplexDocument:
    """
    JSON form of a complex with a placement.

    Parameters:
    - n: number of variables.
    - variables: variable names used in the expressions.
    - indices: (label, degree) pairs; their order fixes row and column order.
    - placement: label -> coordinates as "p/q" strings.
    - differentials: k -> d^k as rows I_{k+1} by columns I_k of Laurent expressions.
    """
    n: int
    variables: List[str]
    indices: List[Tuple[str, int]]
    placement: Dict[str, List[str]] = field(default_factory=dict)
    differentials: Dict[int, List[List[str]]] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "ComplexDocument":
        try:
            n = int(data["n"])
            variables = list(data.get("variables") or default_variables(n))
            indices = [(str(entry["label"]), int(entry["degree"])) for entry in data["indices"]]
            placement = {str(k): [str(x) for x in v] for k, v in data.get("placement", {}).items()}
            differentials = {int(k): [[str(e) for e in row] for row in matrix]
                             for k, matrix in data.get("differentials", {}).items()}
        except (KeyError, TypeError) as error:
            raise ValueError(f"ComplexDocument: malformed document ({error!r})")
        if len(variables) != n:
            raise ValueError(f"ComplexDocument: {len(variables)} variable names for n = {n}")
        return cls(n, variables, indices, placement, differentials)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "variables": list(self.variables),
            "indices": [{"label": label, "degree": degree} for label, degree in self.indices],
            "placement": {label: list(point) for label, point in self.placement.items()},
            "differentials": {str(k): [list(row) for row in matrix]
                              for k, matrix in sorted(self.differentials.items())},
        }

    def to_complex(self) -> FreeComplex:
        degrees = dict(self.indices)
        if len(degrees) != len(self.indices):
            raise ValueError("ComplexDocument: duplicate index labels")
        matrices = {k: [[parse_laurent(e, self.variables) for e in row] for row in matrix]
                    for k, matrix in self.differentials.items()}
        return FreeComplex.from_matrices(self.n, degrees, matrices)

    def to_placement(self) -> Placement:
        if not self.placement:
            raise ValueError("ComplexDocument: the document has no placement")
        return Placement(self.placement, n=self.n)

    @classmethod
    def from_complex(cls, F: FreeComplex, P: Optional[Placement] = None,
                     variables: Optional[Sequence[str]] = None) -> "ComplexDocument":
        variables = list(variables or default_variables(F.n))
        differentials = {}
        for k in F.present_degrees():
            if F.has_differential(k):
                differentials[k] = [[p.to_string(variables) for p in row] for row in F.matrix(k)]
        placement = {}
        if P is not None:
            placement = {str(label): point_strings(P[label]) for label in F.labels}
        return cls(F.n, variables, [(str(label), F.degrees[label]) for label in F.labels],
                   placement, differentials)


class ComplexDocumentManager:
    """
    Class to load and save complex documents on disk.
    """

    def __init__(self, document_path):
        self.document_path = document_path
        self.document = self.load_document()

    def load_document(self) -> dict:
        """
        Load the document from its JSON file; a missing file gives an empty document.
        """
        if os.path.exists(self.document_path):
            with open(self.document_path, 'r') as file:
                try:
                    document = json.load(file)
                except json.JSONDecodeError as error:
                    raise ValueError(f"ComplexDocumentManager: {self.document_path} is not JSON ({error})")
            return document
        else:
            return {}

    def save_document(self):
        """
        Save the document to its JSON file.
        """
        directory = os.path.dirname(self.document_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self.document_path, 'w') as file:
            json.dump(self.document, file, indent=4)

    def update_document(self, key, value):
        """
        Update one top-level field and save.
        """
        self.document[key] = value
        self.save_document()

    def set_complex(self, F: FreeComplex, P: Optional[Placement] = None, variables=None):
        self.document = ComplexDocument.from_complex(F, P, variables).to_dict()
        self.save_document()

    def parsed(self) -> ComplexDocument:
        if not self.document:
            raise ValueError(f"ComplexDocumentManager: no document at {self.document_path}")
        return ComplexDocument.from_dict(self.document)

    def get_complex(self) -> FreeComplex:
        """
        The FreeComplex described by the document.
        """
        return self.parsed().to_complex()

    def get_placement(self) -> Placement:
        """
        The placement stored with the complex.
        """
        return self.parsed().to_placement()
