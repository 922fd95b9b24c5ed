"""Declarative schemas for run configuration, reports, diagram input and Appendix A rows.
"""
from .exceptions import HurwitzLabValidationError
from .fields import (
    BoolField, BraidWordField, DictField, Field, IntField, ListField, MatrixField, StrField,
    TypeTagField,
)
from .lattice import EDGE_VALUES, parse_diagram
from .objects import HurwitzObject
from .validators import TypeTag

__all__ = [
    'SCHEMA_ID', 'COMMANDS', 'EMIT_FORMATS', 'DEFAULT_CAP', 'DEFAULT_SEED', 'RunConfig', 'Report',
    'DiagramSchema', 'AppendixRowSchema',
]

SCHEMA_ID = 'hurwitz-lab/1'

COMMANDS = ('rootsys', 'weyl', 'hurwitz', 'elliptic', 'poset', 'verify')

EMIT_FORMATS = ('json', 'dot', 'text')

DEFAULT_CAP = 10 ** 7

DEFAULT_SEED = 20200101

ELLIPTIC_ACTIONS = {
    ('elliptic', 'splitting'),
    ('elliptic', 'verify-appendix'),
    ('poset', 'gen'),
}


class RunConfig(HurwitzObject):
    """Flags of one command line run.
    """
    command = StrField(choices=COMMANDS)
    action = StrField(required=False)
    type_tag = TypeTagField(attr='type', label='type', required=False)
    window = IntField(min_value=0, default=2)
    cap = IntField(min_value=1, default=DEFAULT_CAP)
    threads = IntField(min_value=1, default=1)
    seed = IntField(default=DEFAULT_SEED)
    emit = StrField(choices=EMIT_FORMATS, default='text')
    out = StrField(required=False)
    m = IntField(min_value=0, required=False)
    target = IntField(min_value=0, required=False)
    seed_file = StrField(required=False)

    def validate_type_tag(self, value):
        if (self.command, self.action) in ELLIPTIC_ACTIONS:
            TypeTag(elliptic=True)(value)

    def validate_emit(self, value):
        if value == 'dot' and self.command != 'poset':
            raise HurwitzLabValidationError('DOT output is only available for posets.')


class Report(HurwitzObject):
    """Machine readable result of a run.

    ``elapsed`` is left out unless timing was requested, so that reports of equal runs compare
    equal byte for byte.
    """
    schema = StrField(default=SCHEMA_ID, choices=(SCHEMA_ID,))
    command = DictField()
    results = DictField()
    passed = BoolField(default=True)
    truncated = BoolField(default=False)
    elapsed = Field(required=False)

    def to_dict(self):
        data = super().to_dict()
        if data.get('elapsed') is None:
            data.pop('elapsed', None)
        return data


class DiagramSchema(HurwitzObject):
    """``{"vertices": [...], "edges": [[i, j, kind], ...]}`` as read from a JSON file.
    """
    vertices = ListField()
    edges = ListField(required=False)

    def validate_vertices(self, value):
        if not value:
            raise HurwitzLabValidationError('A diagram needs at least one vertex.')
        if any(not isinstance(v, (str, int)) or isinstance(v, bool) for v in value):
            raise HurwitzLabValidationError('Vertex labels must be strings or integers.')

    def validate_edges(self, value):
        errors = []
        for edge in value:
            if not isinstance(edge, (list, tuple)) or len(edge) != 3:
                errors.append('Edge {0!r} must be [i, j, kind].'.format(edge))
            elif edge[2] not in EDGE_VALUES:
                errors.append('Unknown edge kind {0!r}.'.format(edge[2]))
        if errors:
            raise HurwitzLabValidationError(errors)

    def to_diagram(self):
        return parse_diagram(self.validated().to_dict())


class AppendixRowSchema(HurwitzObject):
    """One printed braid with its matrix.

    The braid evaluated is ``tau^-1 rho tau``; rows without ``rho`` evaluate ``tau`` alone.
    ``corrected`` holds a matrix for rows whose printed matrix is known to carry a misprint.
    """
    id = StrField(min_length=1)
    table = IntField(min_value=0, max_value=3)
    type_tag = TypeTagField(attr='type', label='type', elliptic=True)
    tau = BraidWordField()
    rho = BraidWordField(required=False)
    matrix = MatrixField(rows=2, cols=2)
    corrected = MatrixField(rows=2, cols=2, required=False)
    tau_variants = ListField(required=False)
    notes = ListField(required=False)

    def validate_tau_variants(self, value):
        errors = []
        for variant in value:
            if not isinstance(variant, list) or not variant:
                errors.append('Variant {0!r} must be a nonempty braid word.'.format(variant))
            elif any(isinstance(x, bool) or not isinstance(x, int) or x == 0 for x in variant):
                errors.append('Variant {0!r} has a letter that is not a nonzero integer.'
                              .format(variant))
        if errors:
            raise HurwitzLabValidationError(errors)
