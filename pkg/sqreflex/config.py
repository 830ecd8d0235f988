"""
.. module:: config
    :platform: Unix, Windows
    :synopsis: Default parameters and the run configuration used by the command-line application

.. moduleauthor:: sqreflex developers

"""

__all__ = ['RunConfig']

# Global seed used when none is given
DEFAULT_SEED = 1

# Kornblum search: default degree cap is deg(f) + KORNBLUM_CAP_OFFSET, doubled on each retry
KORNBLUM_CAP_OFFSET = 4
KORNBLUM_RETRIES = 4

# Search spaces up to this size are enumerated exhaustively, larger ones are sampled
EXHAUSTIVE_LIMIT = 4096
SAMPLE_SIZE = 2048

# Bounded isotropic vector search
VECTOR_CAP = 6

# Upper bound on the number of points enumerated by the transfer module
ENUM_BUDGET = 10 ** 6

# Upper bound on the number of items of a corpus scan
CORPUS_BUDGET = 10 ** 5

# Fields up to this size keep exp/log tables for multiplication
FIELD_TABLE_LIMIT = 2 ** 20

# JSON schema version of all reports
SCHEMA_VERSION = 1


class RunConfig(object):
    """ Run configuration of the command-line application.

    The same configuration applied to the same inputs always produces byte-identical JSON output.

    Keyword arguments:
        * ``seed``: global seed. *Default: DEFAULT_SEED*
        * ``kornblum_cap``: degree cap of the Kornblum search, ``None`` selects ``deg(f) + 4``. *Default: None*
        * ``witness_cap``: degree cap of the exhaustive witness search, ``None`` selects ``3 deg(f) / 2``. *Default: None*
        * ``vector_cap``: degree cap of the isotropic vector search. *Default: VECTOR_CAP*
        * ``jobs``: number of worker processes. *Default: 1*
        * ``output``: ``json`` or ``text``. *Default: text*
        * ``budget``: enumeration budget. *Default: ENUM_BUDGET*
    """
    def __init__(self, field, **kwargs):
        self._field = None
        self.field = field
        self._seed = int(kwargs.get('seed', DEFAULT_SEED))
        self._kornblum_cap = kwargs.get('kornblum_cap', None)
        self._witness_cap = kwargs.get('witness_cap', None)
        self._vector_cap = int(kwargs.get('vector_cap', VECTOR_CAP))
        self._jobs = max(1, int(kwargs.get('jobs', 1)))
        self._output = None
        self.output = kwargs.get('output', 'text')
        self._budget = int(kwargs.get('budget', ENUM_BUDGET))

    def __str__(self):
        return "RunConfig(field={}, seed={}, jobs={})".format(self._field, self._seed, self._jobs)

    __repr__ = __str__

    @property
    def field(self):
        """ Base field.

        :getter: Gets the base field
        :setter: Sets the base field
        :type: gf.FieldDesc
        """
        return self._field

    @field.setter
    def field(self, value):
        if not hasattr(value, 'p') or not hasattr(value, 'k'):
            raise TypeError("Base field must be a field descriptor")
        self._field = value

    @property
    def seed(self):
        """ Global seed.

        :getter: Gets the global seed
        :type: int
        """
        return self._seed

    @property
    def kornblum_cap(self):
        """ Degree cap of the Kornblum search, ``None`` for the default rule.

        :getter: Gets the cap
        :type: int or None
        """
        return self._kornblum_cap

    @property
    def witness_cap(self):
        """ Degree cap of the exhaustive witness search, ``None`` for the default bound.

        :getter: Gets the cap
        :type: int or None
        """
        return self._witness_cap

    @property
    def vector_cap(self):
        """ Degree cap of the isotropic vector search.

        :getter: Gets the cap
        :type: int
        """
        return self._vector_cap

    @property
    def jobs(self):
        """ Number of worker processes.

        :getter: Gets the number of worker processes
        :type: int
        """
        return self._jobs

    @property
    def budget(self):
        """ Enumeration budget.

        :getter: Gets the budget
        :type: int
        """
        return self._budget

    @property
    def output(self):
        """ Output mode.

        :getter: Gets the output mode
        :setter: Sets the output mode, ``json`` or ``text``
        :type: str
        """
        return self._output

    @output.setter
    def output(self, value):
        if value not in ('json', 'text'):
            raise ValueError("Output mode must be 'json' or 'text'")
        self._output = value

    def search_options(self):
        """ Keyword arguments passed to the library operations.

        :return: keyword arguments
        :rtype: dict
        """
        opts = dict(seed=self._seed)
        if self._kornblum_cap is not None:
            opts['degree_cap'] = int(self._kornblum_cap)
        if self._witness_cap is not None:
            opts['witness_cap'] = int(self._witness_cap)
        return opts

    def to_dict(self):
        """ Dictionary form of the configuration, used in report headers.

        :return: configuration
        :rtype: dict
        """
        return dict(
            field=str(self._field),
            seed=self._seed,
            kornblum_cap=self._kornblum_cap,
            witness_cap=self._witness_cap,
            vector_cap=self._vector_cap,
            budget=self._budget,
        )
