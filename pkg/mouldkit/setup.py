# -*- coding: utf-8 -*-

"""

  package setup
  ~~~~~~~~~~~~~

  :author: mouldkit authors
  :copyright: (c) mouldkit authors, 2026
  :license: This software makes use of the MIT Open Source License.
            A copy of this license is included as ``LICENSE.md`` in
            the root of the project.

"""


if __debug__:

  # setuptools
  import sys
  import logging
  import setuptools as tools


  ## Constants / Globals

  dependencies = ['logbook']

  ## Logging
  log = logging.getLogger('mouldkit.setup')
  log_handler = logging.StreamHandler(sys.stdout)
  log.addHandler(log_handler), log.setLevel(logging.INFO)


  def prepare():  # pragma: no cover

    """ Prepare constants and tools for setting up mouldkit.

        :returns: ``go``, a closured function that, when called, will begin
          package setup. """

    try:
      import logbook  # noqa
    except ImportError:  # pragma: no cover
      log.info('`logbook` not found; it will be installed. Until then,'
               ' diagnostics fall back to stdlib logging.')

    return lambda: tools.setup(

      # == info == #
      name="mouldkit",
      version="0.1.0",
      description="Exact mould calculus, special derivations of the free"
                  " Lie algebra and iterated Eisenstein integrals",

      # == authorship == #
      author="mouldkit authors",

      # == flags == #
      zip_safe=True,
      python_requires=">=3.8",

      # == package tree == #
      packages=["mouldkit",
                "mouldkit.util"] +

               (["mouldkit_tests",
                 "mouldkit_tests.test_scalar",
                 "mouldkit_tests.test_freelie",
                 "mouldkit_tests.test_derivations",
                 "mouldkit_tests.test_moulds",
                 "mouldkit_tests.test_eisenstein",
                 "mouldkit_tests.test_relations",
                 "mouldkit_tests.test_util"] if __debug__ else []),

      # == entry points == #
      entry_points={
        'console_scripts': ['mouldkit = mouldkit.cli:main']},

      # == dependencies == #
      install_requires=dependencies,

      # == test dependencies == #
      extras_require={
        'test': ['pytest', 'pytest-cov', 'hypothesis', 'coverage', 'sympy',
                 'flake8', 'tox']})
