from purepolylog import cli

raise SystemExit(cli.main())
