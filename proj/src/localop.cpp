// localop: implementation pending
