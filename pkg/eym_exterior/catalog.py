r"""
Catalog of standard runs

The named run configurations behind the acceptance properties.

EXAMPLES::

    sage: from eym_exterior import catalog
    sage: catalog.hardy_sweep()['hardy']['ks']
    [2.5, 3.0, 4.0]
"""

# Do not add code to this file, only imports.

from eym_exterior.standard_runs import (identities, conservation_pair, decay_run,  # noqa: F401
                                        hardy_sweep, bootstrap_pair)
