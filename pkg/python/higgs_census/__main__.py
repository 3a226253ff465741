# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

from higgs_census.cli.main import main

main()
