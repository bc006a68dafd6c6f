from mubplane.main import cli_main

cli_main()
